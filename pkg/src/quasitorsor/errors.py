"""Exception types shared across the package."""


class QuasiTorsorError(Exception):
    pass


class ParseError(QuasiTorsorError, ValueError):
    def __init__(self, msg, line=None):
        super().__init__(msg)
        self.line = line


class RmapSyntaxError(ParseError):
    pass


class DuplicateDart(ParseError):
    pass


class MissingDart(ParseError):
    pass


class Disconnected(ParseError):
    pass


class NotQuasiTree(QuasiTorsorError, ValueError):
    pass


class NotSkewSymmetric(QuasiTorsorError, ValueError):
    pass


class NotPU(QuasiTorsorError, ValueError):
    pass


class NotABasis(QuasiTorsorError, ValueError):
    pass


class NotCobasisElement(QuasiTorsorError, ValueError):
    pass


class NotSubtransversal(QuasiTorsorError, ValueError):
    pass


class NotHalfFourientation(QuasiTorsorError, ValueError):
    pass


class TooLarge(QuasiTorsorError, ValueError):
    pass


class NotTriangulating(QuasiTorsorError, ValueError):
    pass


class NotBijective(QuasiTorsorError, AssertionError):
    pass


class InconsistentExtraction(QuasiTorsorError, AssertionError):
    pass


class NotGenusZero(QuasiTorsorError, ValueError):
    pass


class NotSimplyTransitive(QuasiTorsorError, ValueError):
    pass


class AxiomsFailed(QuasiTorsorError, ValueError):
    pass
