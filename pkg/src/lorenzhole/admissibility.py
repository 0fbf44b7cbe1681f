"""Kneading pairs and their admissibility predicates."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .seqcore import Seq, shift, shifts


@dataclass(frozen=True)
class KneadingPair:
    """An ordered pair ``(upper, lower)``: kneading invariants ``(k+, k-)`` or hole codes ``(b̂, â)``."""

    upper: Seq
    lower: Seq

    def __post_init__(self):
        if self.upper.first() != "1":
            raise DomainError(f"upper sequence {self.upper} must start with 1")
        if self.lower.first() != "0":
            raise DomainError(f"lower sequence {self.lower} must start with 0")

    @classmethod
    def parse(cls, upper: str, lower: str) -> "KneadingPair":
        return cls(Seq.parse(upper), Seq.parse(lower))

    def __str__(self) -> str:
        return f"({self.upper}, {self.lower})"

    @property
    def bounds(self) -> tuple[Seq, Seq]:
        """``(σ(upper), σ(lower))``, the bounds defining Ω(upper, lower)."""
        return shift(self.upper), shift(self.lower)


def is_hs_admissible(p: KneadingPair) -> bool:
    lo, hi = p.bounds
    return (all(lo <= t < hi for t in shifts(p.upper))
            and all(lo < t <= hi for t in shifts(p.lower)))


def is_weak_admissible(p: KneadingPair) -> bool:
    lo, hi = p.bounds
    return all(lo <= t <= hi for t in shifts(p.upper) + shifts(p.lower))


def is_degenerate_hole(bhat: Seq, ahat: Seq) -> bool:
    """True when the survivor set collapses into ``{0, 1}``: ``â|_2 = 00`` or ``b̂|_2 = 11``."""
    return ahat.prefix(2) == "00" or bhat.prefix(2) == "11"
