"""The ADE catalog: Milnor numbers, log canonical thresholds, pair weights."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

# weights (w1, w2) of the normal forms x^3 + y^4, x^3 + x*y^3, x^3 + y^5
_E_WEIGHTS = {
    6: (Fraction(1, 3), Fraction(1, 4)),
    7: (Fraction(1, 3), Fraction(2, 9)),
    8: (Fraction(1, 3), Fraction(1, 5)),
}


@dataclass(frozen=True, order=True)
class AdeType:
    kind: str
    index: int

    def __post_init__(self):
        ok = (
            (self.kind == "A" and self.index >= 1)
            or (self.kind == "D" and self.index >= 4)
            or (self.kind == "E" and self.index in (6, 7, 8))
        )
        if not ok:
            raise ValueError(f"no simple singularity {self.kind}{self.index}")

    @classmethod
    def parse(cls, token: str) -> AdeType:
        m = re.fullmatch(r"\s*([ADE])_?(\d+)\s*", token, re.I)
        if not m:
            raise ValueError(f"unknown singularity type {token!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self):
        return self.name

    @property
    def mu(self) -> int:
        return self.index

    @property
    def tau(self) -> int:
        # ADE germs are quasi-homogeneous
        return self.index

    @property
    def lct(self) -> Fraction:
        if self.kind == "A":
            return Fraction(1, 2) + Fraction(1, self.index + 1)
        if self.kind == "D":
            return Fraction(self.index, 2 * (self.index - 1))
        w1, w2 = _E_WEIGHTS[self.index]
        return w1 + w2

    @property
    def pair_weight(self) -> int | None:
        """Sum of pairwise intersection multiplicities of smooth branches.

        Defined for the types a union of smooth components can produce:
        A_{2j-1} (two branches with contact j) and D_{2j} (a line through
        such a tangency).
        """
        if self.kind == "A" and self.index % 2 == 1:
            return (self.index + 1) // 2
        if self.kind == "D" and self.index % 2 == 0:
            return self.index // 2 + 1
        return None

    def normal_form(self) -> str:
        """Local normal form in the expression grammar (variables x, y)."""
        k = self.index
        if self.kind == "A":
            return f"x^2 + y^{k + 1}"
        if self.kind == "D":
            return f"y^2*x + x^{k - 1}"
        return {6: "x^3 + y^4", 7: "x^3 + x*y^3", 8: "x^3 + y^5"}[k]


A1, A3, A5, A7 = (AdeType("A", i) for i in (1, 3, 5, 7))
D4, D6, D8 = (AdeType("D", i) for i in (4, 6, 8))

# the seven types tracked by weak combinatorics, in tuple order
CATALOG = {"n2": A1, "n3": D4, "t3": A3, "t5": A5, "t7": A7, "d6": D6, "d8": D8}


def parse_types(text: str) -> list[AdeType]:
    return [AdeType.parse(tok) for tok in text.split(",") if tok.strip()]
