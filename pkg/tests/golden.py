"""Hand-transcribed values for the torus fixture, plus helpers to read them."""

from quasitorsor.orthomat import GroundSet

N = 4
G4 = GroundSet(N)

BASES = ["12*3*4*", "1*23*4*", "1234*", "123*4"]

# one sign of each signed circuit, as {element: sign}
CIRCUITS = [
    {"1*": 1, "2*": -1},
    {"3": 1, "4": -1},
    {"3": 1, "1*": -1},
    {"4": 1, "1*": -1},
    {"3": 1, "2*": -1},
    {"4": 1, "2*": -1},
    {"1": 1, "2": 1, "3*": 1, "4*": 1},
]

JAC_REPRESENTATIVES = [(0, 0, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)]
PI_GENERATORS = [(1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1), (1, 1, 1, 1)]

CLASSES = [
    {"++++", "----"},
    {"+++-", "++-+", "+-++", "-+++"},
    {"++--", "+-+-", "-++-", "+--+", "-+-+", "--++"},
    {"+---", "-+--", "--+-", "---+"},
]

# psi of ++++ and +++-, doubled, E then E*
PSI = {
    "++++": (1, 1, 0, 0, 0, 0, 1, 1),
    "+++-": (0, 0, 1, -1, 1, 1, 0, 0),
}

SIGMA = [
    {"1*": 1, "2*": -1},
    {"3": -1, "4": 1},
    {"1*": 1, "3": -1},
    {"1*": 1, "4": -1},
    {"2*": 1, "3": -1},
    {"2*": -1, "4": 1},
    {"1": -1, "2": -1, "3*": -1, "4*": -1},
]

# doubled beta_sigma, basis -> signs
TABLE_BETA = {
    "12*3*4*": "+--+",
    "1*23*4*": "----",
    "1234*": "++-+",
    "123*4": "+---",
}

TABLE_BETA_PRIME = {
    "12*3*4*": "+--+",
    "1*23*4*": "----",
    "1234*": "++--",
    "123*4": "+-+-",
}

# dependency exhibiting that sigma' is not acyclic
DEPENDENCY = [{"3": 1, "4": -1}, {"2*": 1, "3": -1}, {"2*": -1, "4": 1}]

# boundary of the quasi-tree {1} read from 1-, with each edge named by its
# direction in gamma (tail -, head +)
TOUR_GAMMA = ["1*-", "4+", "2+", "4-", "1*+", "3+", "2-", "3-"]
GAMMA_DIFFERS = {2, 3}
BERNARDI_FIRST = "+--+"


def vec(d, n=N):
    g = GroundSet(n)
    v = [0] * (2 * n)
    for k, s in d.items():
        v[g.parse(k)] = s
    return tuple(v)


def signs(s):
    return tuple(1 if c == "+" else -1 for c in s)
