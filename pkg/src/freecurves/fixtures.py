"""Reference arrangements with their known invariants.

Each fixture is a list of components in the expression grammar, with an
optional quadratic field ``t^2 = c`` and the expected global and local data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement
from .expr import parse_poly
from .field import QQ, FieldTower, adjoin_sqrt


@dataclass(frozen=True)
class Fixture:
    name: str
    components: tuple[str, ...]
    tau: int
    mdr: int
    free: bool
    maximizing: bool
    inventory: dict = field(default_factory=dict)
    field_square: Fraction | None = None
    note: str = ""

    @property
    def exponents(self) -> tuple[int, int]:
        d = self.degree
        return (self.mdr, d - 1 - self.mdr)

    @property
    def degree(self) -> int:
        return self.arrangement().degree

    def tower(self) -> FieldTower:
        if self.field_square is None:
            return QQ
        return adjoin_sqrt(QQ, QQ(self.field_square))[0]

    def arrangement(self) -> Arrangement:
        tower = self.tower()
        return Arrangement([parse_poly(c, tower) for c in self.components])

    def curve_file(self) -> str:
        lines = [f"# {self.name}"]
        if self.field_square is not None:
            lines.append(f"field: t^2 = {self.field_square}")
        lines += [f"component: {c}" for c in self.components]
        return "\n".join(lines) + "\n"


PERSSON_CONICS = ("x^2 + y^2 - z^2", "2*x^2 + y^2 + 2*x*z", "2*x^2 + y^2 - 2*x*z")

PERSSON = Fixture(
    "Persson sextic F",
    PERSSON_CONICS,
    tau=19, mdr=2, free=True, maximizing=True,
    inventory={"A1": 2, "A3": 1, "A7": 2},
)

SEPTIC_G = Fixture(
    "Maximizing septic G",
    ("y",) + PERSSON_CONICS,
    tau=28, mdr=2, free=True, maximizing=True,
    inventory={"A1": 2, "D6": 1, "D10": 2},
)

CONFIG_5 = Fixture(
    "Configuration 5",
    ("x", "y - z", "x - y", "y^2 - x*z", "y^2 - x*z - z^2"),
    tau=27, mdr=3, free=True, maximizing=False,
    inventory={"A1": 3, "D4": 2, "D6": 1, "D10": 1},
)

CONFIG_8 = Fixture(
    "Configuration 8",
    ("x", "x - y", "(2*t - 2)*x - 2*t*y + z", "y^2 - x*z", "z^2 - 4*(x*z - y^2)"),
    tau=27, mdr=3, free=True, maximizing=False,
    inventory={"A1": 4, "D4": 1, "D6": 2, "A7": 1},
    field_square=Fraction(-1),
    note="third line with the sign of its y-term flipped; see CONFIG_8_AS_PRINTED",
)

# the third line exactly as printed: a transversal instead of a tangent
# through the A7 point, which loses one unit of tau
CONFIG_8_AS_PRINTED = Fixture(
    "Configuration 8 (as printed)",
    ("x", "x - y", "(2*t - 2)*x + 2*t*y + z", "y^2 - x*z", "z^2 - 4*(x*z - y^2)"),
    tau=26, mdr=3, free=False, maximizing=False,
    inventory={"A1": 6, "A3": 1, "D4": 1, "D6": 1, "A7": 1},
    field_square=Fraction(-1),
)

CONFIG_12 = Fixture(
    "Configuration 12",
    ("x", "z", "2*y - x - z", "y^2 - x*z", "(-11 - 5*t)*z*(2*y - x - z) - 2*x*(2*y - z)"),
    tau=27, mdr=3, free=True, maximizing=False,
    inventory={"A1": 2, "A3": 3, "D4": 1, "D6": 2},
    field_square=Fraction(5),
)

CONFIG_19 = Fixture(
    "Configuration 19",
    ("x", "y - 3*x - 8*z", "y + 3*x - 8*z", "y + x - 4*z", "y + 9*x + 4*z",
     "3*x^2 + y^2 - 16*z^2"),
    tau=27, mdr=3, free=True, maximizing=False,
    inventory={"A1": 2, "A3": 1, "D4": 4, "D6": 1},
)

CONFIG_A = Fixture(
    "Configuration A",
    ("x", "y", "x - z", "x + z", "y - z", "x^2 + y^2 - z^2"),
    tau=27, mdr=3, free=True, maximizing=False,
    inventory={"A1": 5, "D4": 1, "D6": 3},
)

CONFIG_B = Fixture(
    "Configuration B",
    ("x", "x - z", "x + z", "y - z", "y + z", "x^2 + y^2 - z^2"),
    tau=27, mdr=3, free=True, maximizing=False,
    inventory={"A1": 5, "A3": 2, "D4": 1, "D6": 2},
)

CONFIG_C = Fixture(
    "Configuration C",
    ("x - z", "x + z", "y + z", "x + 6/10*z", "y - 1/2*x + 1/2*z", "x^2 + y^2 - z^2"),
    tau=27, mdr=3, free=True, maximizing=False,
    inventory={"A1": 3, "A3": 2, "D4": 3, "D6": 1},
)

REFERENCE_FIXTURES = (
    PERSSON, SEPTIC_G, CONFIG_5, CONFIG_8, CONFIG_12, CONFIG_19, CONFIG_A, CONFIG_B, CONFIG_C,
)
SEPTIC_CONFIGURATIONS = (CONFIG_5, CONFIG_8, CONFIG_12, CONFIG_19, CONFIG_A, CONFIG_B, CONFIG_C)
ALL_FIXTURES = REFERENCE_FIXTURES + (CONFIG_8_AS_PRINTED,)


# (n2, n3, t3, t5, t7, d6, d8) for one conic and five lines, as tabulated
SEPTIC_K1_TUPLES = (
    (0, 4, 0, 0, 0, 2, 0), (0, 4, 2, 0, 0, 1, 0), (0, 4, 4, 0, 0, 0, 0), (0, 5, 0, 0, 0, 0, 1),
    (0, 5, 1, 1, 0, 0, 0), (1, 3, 1, 0, 0, 2, 0), (1, 3, 3, 0, 0, 1, 0), (1, 3, 5, 0, 0, 0, 0),
    (1, 4, 0, 1, 0, 1, 0), (1, 4, 1, 0, 0, 0, 1), (1, 4, 2, 1, 0, 0, 0), (1, 5, 0, 0, 1, 0, 0),
    (2, 2, 0, 0, 0, 3, 0), (2, 2, 2, 0, 0, 2, 0), (2, 2, 4, 0, 0, 1, 0), (2, 2, 6, 0, 0, 0, 0),
    (2, 3, 0, 0, 0, 1, 1), (2, 3, 1, 1, 0, 1, 0), (2, 3, 2, 0, 0, 0, 1), (2, 3, 3, 1, 0, 0, 0),
    (2, 4, 0, 2, 0, 0, 0), (2, 4, 1, 0, 1, 0, 0), (3, 1, 1, 0, 0, 3, 0), (3, 1, 3, 0, 0, 2, 0),
    (3, 1, 5, 0, 0, 1, 0), (3, 1, 7, 0, 0, 0, 0), (3, 2, 0, 1, 0, 2, 0), (3, 2, 1, 0, 0, 1, 1),
    (3, 2, 2, 1, 0, 1, 0), (3, 2, 3, 0, 0, 0, 1), (3, 2, 4, 1, 0, 0, 0), (3, 3, 0, 0, 1, 1, 0),
    (3, 3, 0, 1, 0, 0, 1), (3, 3, 1, 2, 0, 0, 0), (3, 3, 2, 0, 1, 0, 0), (4, 0, 0, 0, 0, 4, 0),
    (4, 0, 2, 0, 0, 3, 0), (4, 0, 4, 0, 0, 2, 0), (4, 0, 6, 0, 0, 1, 0), (4, 0, 8, 0, 0, 0, 0),
    (4, 1, 0, 0, 0, 2, 1), (4, 1, 1, 1, 0, 2, 0), (4, 1, 2, 0, 0, 1, 1), (4, 1, 3, 1, 0, 1, 0),
    (4, 1, 4, 0, 0, 0, 1), (4, 1, 5, 1, 0, 0, 0), (4, 2, 0, 0, 0, 0, 2), (4, 2, 0, 2, 0, 1, 0),
    (4, 2, 1, 0, 1, 1, 0), (4, 2, 1, 1, 0, 0, 1), (4, 2, 2, 2, 0, 0, 0), (4, 2, 3, 0, 1, 0, 0),
    (4, 3, 0, 1, 1, 0, 0), (5, 0, 0, 1, 0, 3, 0), (5, 0, 1, 0, 0, 2, 1), (5, 0, 2, 1, 0, 2, 0),
    (5, 0, 3, 0, 0, 1, 1), (5, 0, 4, 1, 0, 1, 0), (5, 0, 5, 0, 0, 0, 1), (5, 0, 6, 1, 0, 0, 0),
    (5, 1, 0, 0, 1, 2, 0), (5, 1, 0, 1, 0, 1, 1), (5, 1, 1, 0, 0, 0, 2), (5, 1, 1, 2, 0, 1, 0),
    (5, 1, 2, 0, 1, 1, 0), (5, 1, 2, 1, 0, 0, 1), (5, 1, 3, 2, 0, 0, 0), (5, 1, 4, 0, 1, 0, 0),
    (5, 2, 0, 0, 1, 0, 1), (5, 2, 0, 3, 0, 0, 0), (5, 2, 1, 1, 1, 0, 0), (6, 0, 0, 0, 0, 1, 2),
    (6, 0, 0, 2, 0, 2, 0), (6, 0, 1, 0, 1, 2, 0), (6, 0, 1, 1, 0, 1, 1), (6, 0, 2, 0, 0, 0, 2),
    (6, 0, 2, 2, 0, 1, 0), (6, 0, 3, 0, 1, 1, 0), (6, 0, 3, 1, 0, 0, 1), (6, 0, 4, 2, 0, 0, 0),
    (6, 0, 5, 0, 1, 0, 0), (6, 1, 0, 1, 1, 1, 0), (6, 1, 0, 2, 0, 0, 1), (6, 1, 1, 0, 1, 0, 1),
    (6, 1, 1, 3, 0, 0, 0), (6, 1, 2, 1, 1, 0, 0), (6, 2, 0, 0, 2, 0, 0), (7, 0, 0, 0, 1, 1, 1),
    (7, 0, 0, 1, 0, 0, 2), (7, 0, 0, 3, 0, 1, 0), (7, 0, 1, 1, 1, 1, 0), (7, 0, 1, 2, 0, 0, 1),
    (7, 0, 2, 0, 1, 0, 1), (7, 0, 2, 3, 0, 0, 0), (7, 0, 3, 1, 1, 0, 0), (7, 1, 0, 2, 1, 0, 0),
    (7, 1, 1, 0, 2, 0, 0), (8, 0, 0, 0, 2, 1, 0), (8, 0, 0, 1, 1, 0, 1), (8, 0, 0, 4, 0, 0, 0),
    (8, 0, 1, 2, 1, 0, 0), (8, 0, 2, 0, 2, 0, 0), (9, 0, 0, 1, 2, 0, 0),
)

# the subset of SEPTIC_K1_TUPLES satisfying the Hirzebruch-type inequality
HIRZEBRUCH_SURVIVORS = (
    (0, 4, 0, 0, 0, 2, 0), (0, 5, 0, 0, 0, 0, 1), (1, 3, 1, 0, 0, 2, 0), (1, 4, 0, 1, 0, 1, 0),
    (1, 4, 1, 0, 0, 0, 1), (1, 5, 0, 0, 1, 0, 0), (2, 2, 0, 0, 0, 3, 0), (2, 3, 0, 0, 0, 1, 1),
    (4, 0, 0, 0, 0, 4, 0), (4, 1, 0, 0, 0, 2, 1), (4, 2, 0, 0, 0, 0, 2),
)
SEPTIC_SOLUTION_COUNTS = {1: 103, 2: 116, 3: 77}
SEPTIC_SOLUTION_TOTAL = 296


def by_name(name: str) -> Fixture:
    for f in ALL_FIXTURES:
        if f.name == name:
            return f
    raise KeyError(name)
