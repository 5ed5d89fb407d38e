import pytest

from rank2crystals import new_cartan

# (a, b) pairs exercised by the property suite: every finite type plus
# affine and hyperbolic examples.
CARTANS = [(0, 0), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (2, 3), (3, 2), (4, 1)]
FINITE = [ab for ab in CARTANS if ab[0] * ab[1] < 4]

B2 = new_cartan(1, 2)
A11 = new_cartan(2, 2)

# Crystal graph of B(Lambda_1) for type B2, as a chain of (LS path, monomial).
B2_CHAIN = [
    ("taus=0;a=0,1", "X[0,1]"),
    ("taus=1;a=0,1", "X[0,2]^2*X[1,1]^-1"),
    ("taus=2,1;a=0,1/2,1", "X[0,2]*X[1,2]^-1"),
    ("taus=2;a=0,1", "X[1,1]*X[1,2]^-2"),
    ("taus=3;a=0,1", "X[2,1]^-1"),
]
B2_CHAIN_LABELS = [1, 2, 2, 1]

# Top of the A1^(1) crystal B(Lambda_1) (shift 0): node name -> (depth, LS path, monomial).
A11_TOP = {
    "1": (0, "taus=0;a=0,1", "X[0,1]"),
    "2": (1, "taus=1;a=0,1", "X[0,2]^2*X[1,1]^-1"),
    "3": (2, "taus=2,1;a=0,1/2,1", "X[0,2]*X[1,1]*X[1,2]^-1"),
    "4-1": (3, "taus=2;a=0,1", "X[1,1]^3*X[1,2]^-2"),
    "4-2": (3, "taus=3,2,1;a=0,1/3,1/2,1", "X[0,2]*X[1,2]*X[2,1]^-1"),
    "5-1": (4, "taus=3,2;a=0,1/3,1", "X[1,1]^2*X[2,1]^-1"),
    "5-2": (4, "taus=4,3,2,1;a=0,1/4,1/3,1/2,1", "X[0,2]*X[2,1]*X[2,2]^-1"),
    "6-1": (5, "taus=3,2;a=0,2/3,1", "X[1,1]*X[1,2]^2*X[2,1]^-2"),
    "6-2": (5, "taus=4,3,2;a=0,1/4,1/3,1", "X[1,1]^2*X[1,2]^-1*X[2,1]*X[2,2]^-1"),
    "6-3": (5, "taus=5,4,3,2,1;a=0,1/5,1/4,1/3,1/2,1", "X[0,2]*X[2,2]*X[3,1]^-1"),
    "7-1": (6, "taus=3;a=0,1", "X[1,2]^4*X[2,1]^-3"),
    "7-2": (6, "taus=4,3,2;a=0,1/4,2/3,1", "X[1,1]*X[1,2]*X[2,2]^-1"),
}
A11_TOP_EDGES = [
    ("1", "2", 1), ("2", "3", 2), ("3", "4-1", 2), ("3", "4-2", 1), ("4-1", "5-1", 1),
    ("4-2", "5-2", 2), ("5-1", "6-1", 1), ("5-2", "6-2", 2), ("5-2", "6-3", 1),
    ("6-1", "7-1", 1), ("6-1", "7-2", 2),
]

ACCEPTANCE_LINES = []


@pytest.fixture
def b2():
    return B2


@pytest.fixture
def a11():
    return A11


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
