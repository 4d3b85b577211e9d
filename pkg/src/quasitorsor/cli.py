"""Command-line front end.

Every command builds a report (a list of scalar fields and tables) and
renders it either as TSV-style text or as JSON with the same content.
"""

import argparse
import json
import sys
from importlib import resources

from . import bby, verify
from . import ribbontorsor as rt
from .errors import ParseError, QuasiTorsorError, TooLarge, NotTriangulating
from .jacobian import JacGroup, ReversalSystem, orientation_str
from .orthomat import parse_circuit_line, support
from .ribbonmap import parse_rmap, parse_dart, interlacement_matrix

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_FAIL = 0, 1, 2, 3
FIXTURES = ("edge", "b2", "c3", "torus", "k4")


class Report:
    def __init__(self):
        self.items = []

    def _claim(self, key):
        if any(item[1] == key for item in self.items):
            raise ValueError(f"report key {key!r} used twice")

    def field(self, key, value):
        self._claim(key)
        self.items.append(("field", key, value))

    def table(self, name, header, rows):
        self._claim(name)
        self.items.append(("table", name, list(header), [list(r) for r in rows]))

    def render(self, fmt):
        if fmt == "json":
            out = {}
            for item in self.items:
                if item[0] == "field":
                    out[item[1]] = item[2]
                else:
                    _, name, header, rows = item
                    out[name] = [dict(zip(header, r)) for r in rows]
            return json.dumps(out, indent=2) + "\n"
        lines = []
        for item in self.items:
            if item[0] == "field":
                v = item[2]
                if isinstance(v, (list, tuple)):
                    v = " ".join(str(x) for x in v)
                lines.append(f"{item[1]}: {v}")
            else:
                _, name, header, rows = item
                lines.append(f"[{name}]")
                lines.append("\t".join(header))
                lines.extend("\t".join(str(x) for x in r) for r in rows)
        return "\n".join(lines) + "\n"


class CheckFailed(Exception):
    """A verified property did not hold; args are (identifier, detail)."""


def load_fixture(name):
    return parse_rmap(resources.files("quasitorsor.fixtures")
                      .joinpath(f"{name}.rmap").read_text(encoding="utf-8"))


def _guard(G, max_n):
    if G.n > max_n:
        raise TooLarge(f"{G.n} edges exceeds --max-n {max_n}")


def _qname(Q):
    return "{" + ",".join(str(e) for e in sorted(Q)) + "}"


def cmd_analyze(G, args, rep_):
    rep = rt.canonical_rep(G)
    V, E, F, genus = G.euler_data()
    rep_.field("vertices", V)
    rep_.field("edges", E)
    rep_.field("faces", F)
    rep_.field("genus", genus)
    qts = G.quasi_trees()
    rep_.field("quasi-trees", len(qts))
    rep_.field("bases", len(rep.bases))
    g = rep.ground
    rep_.table("basis-list", ["basis"], [[g.transversal_name(B)] for B in rep.bases])
    rep_.table("circuit-list", ["circuit"], [[g.vector_str(C)] for C in rep.circuits])
    Q = qts[0]
    M = interlacement_matrix(G, Q)
    rep_.field("reference-quasi-tree", _qname(Q))
    names = [f"{e}*" if star else str(e) for e, star in M.indices]
    rep_.table("interlacement", ["index"] + names,
               [[x] + list(row) for x, row in zip(names, M.entries)])
    J = JacGroup(rep)
    rep_.field("jac", J.describe())


def cmd_jac(G, args, rep_):
    rep = rt.canonical_rep(G)
    J = JacGroup(rep)
    rep_.field("invariants", list(J.invariant_factors))
    rep_.field("order", J.order)
    system = ReversalSystem(rep, J)
    rep_.table("classes", ["members"],
               [[" ".join(sorted(orientation_str(O) for O in r.members))] for r in system])


def cmd_classes(G, args, rep_):
    rep = rt.canonical_rep(G)
    J = JacGroup(rep)
    system = ReversalSystem(rep, J)
    rep_.field("class-count", len(system))
    rows = []
    for r in system:
        rows.append([str(r), len(r.members),
                     " ".join(str(x) for x in J.reduce_half(r.representative)),
                     " ".join(sorted(orientation_str(O) for O in r.members))])
    rep_.table("classes", ["representative", "size", "lattice-class-x2", "members"], rows)


def _signature(G, rep, spec):
    if spec == "lex":
        return bby.lex_signature(rep)
    if spec.startswith("bernardi:"):
        h = parse_dart(spec.split(":", 1)[1])
        return rt.extract_signature(G, h, rep)
    if spec.startswith("file:"):
        path = spec.split(":", 1)[1]
        chosen = {}
        circuits = set(rep.circuits)
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    C = parse_circuit_line(rep.ground, line, tag="sig")
                except (ValueError, KeyError) as exc:
                    raise ParseError(f"{path}:{lineno}: {exc}", line=lineno) from None
                if C not in circuits:
                    raise ParseError(f"{path}:{lineno}: not a signed circuit", line=lineno)
                if support(C) in chosen:
                    raise ParseError(f"{path}:{lineno}: circuit chosen twice", line=lineno)
                chosen[support(C)] = C
        if len(chosen) != len(rep.circuit_supports):
            raise ParseError(f"{path}: signature covers {len(chosen)} of "
                             f"{len(rep.circuit_supports)} circuits")
        return bby.CircuitSignature(chosen)
    raise ValueError(f"unknown signature spec {spec!r}")


def _torsor_tables(rep, beta, t, rep_):
    g = rep.ground
    rep_.table("bijection", ["basis", "orientation", "class"],
               [[g.transversal_name(B), orientation_str(beta[B]), str(t.bijection[B])]
                for B in rep.bases])
    rep_.table("torsor", ["g", "basis", "image"],
               [[" ".join(str(x) for x in h), b, im] for h, b, im in t.rows()])


def cmd_bby(G, args, rep_):
    rep = rt.canonical_rep(G)
    sigma = _signature(G, rep, args.signature)
    acyc = bby.is_acyclic(rep, sigma)
    rep_.field("signature", args.signature)
    rep_.field("acyclic", "yes" if acyc else "no")
    beta = bby.beta_sigma(rep, sigma)
    try:
        t = bby.torsor(rep, beta)
    except NotTriangulating as exc:
        raise CheckFailed("bby.triangulating", str(exc)) from None
    _torsor_tables(rep, beta, t, rep_)


def cmd_bernardi(G, args, rep_):
    rep = rt.canonical_rep(G)
    h = parse_dart(args.anchor) if args.anchor else G.darts[0]
    if h not in G.sigma:
        raise ParseError(f"anchor {h} is not a dart of the map")
    rep_.field("anchor", str(h))
    g = rep.ground
    rows = []
    for B in rep.bases:
        Q = {x + 1 for x in B if x < G.n}
        dirs = rt.gamma_h(G, h, Q)
        rows.append([g.transversal_name(B),
                     " ".join(f"{t}>{hd}" for t, hd in (dirs[e] for e in G.edges))])
    rep_.table("directions", ["basis", "arcs"], rows)
    beta = rt.bernardi_map(G, h, rep)
    t = bby.torsor(rep, beta)
    _torsor_tables(rep, beta, t, rep_)


def cmd_duality(G, args, rep_):
    rpt = rt.duality_check(G)
    rep_.table("duality", ["check", "ok"],
               [[k, "yes" if v else "no"] for k, v in rpt.checks.items()])
    rep_.field("result", "pass" if rpt.ok else "fail")
    if not rpt.ok:
        raise CheckFailed("ribbontorsor.duality", rpt.first_failure)


def _run_suites(G, seed, label, rep_, rows):
    failure = None
    for name, ok, detail in verify.run_all(G, seed=seed):
        status = "skip" if ok is None else ("pass" if ok else "fail")
        rows.append([label, name, status, detail])
        if ok is False and failure is None:
            failure = (name, f"{label}: {detail}" if detail else label)
    return failure


def cmd_verify(G, args, rep_):
    if not args.all:
        raise ValueError("verify needs --all")
    rows = []
    failure = _run_suites(G, args.seed, args.input, rep_, rows)
    rep_.table("checks", ["input", "check", "status", "detail"], rows)
    if failure:
        raise CheckFailed(*failure)


def cmd_selftest(args, rep_):
    rows = []
    failure = None
    for name in FIXTURES:
        f = _run_suites(load_fixture(name), args.seed, name, rep_, rows)
        failure = failure or f
    T = load_fixture("torus")
    rep = rt.canonical_rep(T)
    golden = [
        ("golden.torus-bases", sorted(rep.ground.transversal_name(B) for B in rep.bases)
         == sorted(["12*3*4*", "1*23*4*", "1234*", "123*4"])),
        ("golden.torus-jac", JacGroup(rep).invariant_factors == (4,)),
        ("golden.c3-jac", JacGroup(rt.canonical_rep(load_fixture("c3"))).invariant_factors
         == (3,)),
        ("golden.k4-jac", JacGroup(rt.canonical_rep(load_fixture("k4"))).invariant_factors
         == (4, 4)),
    ]
    for name, ok in golden:
        rows.append(["fixtures", name, "pass" if ok else "fail", ""])
        if not ok and failure is None:
            failure = (name, "fixtures")
    rep_.table("checks", ["input", "check", "status", "detail"], rows)
    if failure:
        raise CheckFailed(*failure)


COMMANDS = {
    "analyze": cmd_analyze,
    "jac": cmd_jac,
    "classes": cmd_classes,
    "bby": cmd_bby,
    "bernardi": cmd_bernardi,
    "duality": cmd_duality,
    "verify": cmd_verify,
}


def build_parser():
    p = argparse.ArgumentParser(prog="quasitorsor",
                                description="Ribbon graphs, Jacobians and torsors.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["tsv", "json"], default="tsv")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, default=10,
                        help="refuse maps with more edges than this")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input", help="RMAP file")
        if name == "bby":
            sp.add_argument("--signature", default="lex",
                            help="lex, file:<path> or bernardi:<dart>")
        if name == "bernardi":
            sp.add_argument("--anchor", default=None, help="dart such as 1-")
        if name == "verify":
            sp.add_argument("--all", action="store_true", required=True)
    sub.add_parser("selftest", parents=[common])
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    report = Report()
    try:
        if args.command == "selftest":
            cmd_selftest(args, report)
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                err.write(f"{args.input}: {exc.strerror}\n")
                return EXIT_USAGE
            try:
                G = parse_rmap(text)
            except ParseError as exc:
                msg = str(exc)
                if exc.line is not None:
                    msg = msg.replace(f"line {exc.line}: ", "", 1)
                    err.write(f"{args.input}:{exc.line}: {msg}\n")
                else:
                    err.write(f"{args.input}: {msg}\n")
                return EXIT_PARSE
            _guard(G, args.max_n)
            COMMANDS[args.command](G, args, report)
    except ParseError as exc:
        err.write(f"{exc}\n")
        return EXIT_PARSE
    except CheckFailed as exc:
        out.write(report.render(args.format))
        err.write(f"FAIL {exc.args[0]}: {exc.args[1]}\n")
        return EXIT_FAIL
    except AssertionError as exc:
        out.write(report.render(args.format))
        err.write(f"FAIL assertion: {exc}\n")
        return EXIT_FAIL
    except (TooLarge, ValueError, QuasiTorsorError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    out.write(report.render(args.format))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
