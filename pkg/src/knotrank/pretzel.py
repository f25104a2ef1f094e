"""The odd pretzel knot family and its genus-1 witness sequence.

Covers the closed-form Alexander polynomial, the homologically-fibered
test, the witness knots indexed by n with top knot-Floer rank
2n^2 - 2n + 1, and stabilization by trefoil connected sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly


class UnsupportedStabilized(ValueError):
    """The bigraded rank table only covers unstabilized witnesses."""


class AlreadyStabilized(ValueError):
    """Stabilization starts from an unstabilized witness."""


TREFOIL_ALEXANDER = LaurentPoly(0, (1, -1, 1))


@dataclass(frozen=True)
class PretzelKnot:
    """The pretzel knot P(2l+1, 2m+1, 2n+1), stored by its (l, m, n) parameters."""

    l: int
    m: int
    n: int

    @property
    def strands(self) -> tuple[int, int, int]:
        """The odd half-twist counts of the three bands."""
        return (2 * self.l + 1, 2 * self.m + 1, 2 * self.n + 1)

    @classmethod
    def from_strands(cls, a: int, b: int, c: int) -> "PretzelKnot":
        for v in (a, b, c):
            if v % 2 == 0:
                raise ValueError(f"strand value {v} is even; pretzel strands must be odd")
        return cls((a - 1) // 2, (b - 1) // 2, (c - 1) // 2)


def _closed_form_coefficient(knot: PretzelKnot) -> int:
    l, m, n = knot.l, knot.m, knot.n
    return 1 + l + m + n + l * m + m * n + n * l


def alexander_closed_form(knot: PretzelKnot) -> LaurentPoly:
    """Normalized Alexander polynomial c*(t-1)^2 + t with c = 1+l+m+n+lm+mn+nl."""
    c = _closed_form_coefficient(knot)
    t = LaurentPoly.term(1, 1)
    return ((t - 1) ** 2 * c + t).normalize()


def is_homologically_fibered(knot: PretzelKnot) -> bool:
    """True iff the Alexander polynomial has degree 2*genus and unit constant term.

    For the genus-1 standard surface both conditions collapse to
    |1 + l + m + n + lm + mn + nl| = 1.
    """
    return abs(_closed_form_coefficient(knot)) == 1


@dataclass(frozen=True)
class WitnessKnot:
    """The index-n witness pretzel knot P(-2n+1, 2n+1, 2n^2+1), possibly stabilized.

    ``stab_count`` trefoil summands raise the genus to ``stab_count + 1``
    without changing the top knot-Floer rank.
    """

    index: int
    stab_count: int = 0

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"witness index must be >= 1, got {self.index}")
        if self.stab_count < 0:
            raise ValueError(f"stab_count must be >= 0, got {self.stab_count}")

    @property
    def base(self) -> PretzelKnot:
        return PretzelKnot(-self.index, self.index, self.index * self.index)

    @property
    def genus(self) -> int:
        return self.stab_count + 1

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "stab": self.stab_count,
            "pretzel": list(self.base.strands),
            "genus": self.genus,
            "top_rank": hfk_top_rank(self),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WitnessKnot":
        try:
            index = data["index"]
            stab = data.get("stab", 0)
        except TypeError as exc:
            raise ValueError("witness JSON needs an 'index' field") from exc
        if not isinstance(index, int) or not isinstance(stab, int):
            raise ValueError("'index' and 'stab' must be integers")
        return cls(index, stab)


def witness(n: int) -> WitnessKnot:
    """The n-th witness knot, unstabilized."""
    return WitnessKnot(n)


def hfk_top_rank(w: WitnessKnot) -> int:
    """Rank of the top-grading knot Floer homology: 2n^2 - 2n + 1.

    Stabilization by trefoils (rank-1 fibered summands) leaves the top
    rank unchanged, so the value depends only on the index.
    """
    n = w.index
    return 2 * n * n - 2 * n + 1


def hfk_bigraded(w: WitnessKnot) -> list[tuple[int, int]]:
    """Maslov-graded split (1, n^2-n), (2, n^2-n+1) of the top rank."""
    if w.stab_count:
        raise UnsupportedStabilized(
            "the bigraded split is only tabulated for unstabilized witnesses"
        )
    n = w.index
    return [(1, n * n - n), (2, n * n - n + 1)]


def stabilize(w: WitnessKnot, k: int) -> WitnessKnot:
    """Connected-sum w with k trefoils, giving genus k + 1."""
    if w.stab_count:
        raise AlreadyStabilized(f"witness already carries {w.stab_count} trefoil summands")
    if k < 0:
        raise ValueError(f"stabilization count must be >= 0, got {k}")
    return WitnessKnot(w.index, k)


def alexander_of_witness(w: WitnessKnot) -> LaurentPoly:
    """Alexander polynomial of the (possibly stabilized) witness.

    Connected sums multiply Alexander polynomials, so this is the base
    pretzel polynomial times (1 - t + t^2)^stab_count.
    """
    return alexander_closed_form(w.base) * TREFOIL_ALEXANDER**w.stab_count
