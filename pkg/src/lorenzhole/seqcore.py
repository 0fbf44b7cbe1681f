"""Eventually periodic binary sequences.

A :class:`Seq` stores ``pre + per + per + ...`` in canonical form: the period
is primitive and the preperiod is as short as possible, so two values denote
the same infinite sequence exactly when they compare equal.  Words are plain
strings over ``"0"``/``"1"``.

The literal grammar is ``PRE(PER)``: ``"10(011)"``, ``"(10011)"``, ``"1(0)"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Literal

from .errors import DomainError

Word = str

_LITERAL = re.compile(r"^([01]*)\(([01]+)\)$")


def _check_word(w: str, what: str) -> None:
    if any(ch not in "01" for ch in w):
        raise DomainError(f"{what} {w!r} has symbols outside {{0,1}}")


def primitive_root(w: Word) -> Word:
    """Shortest ``u`` with ``w == u * k``."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True, order=False)
class Seq:
    pre: Word
    per: Word

    def __post_init__(self):
        _check_word(self.pre, "preperiod")
        _check_word(self.per, "period")
        if not self.per:
            raise DomainError("period must be nonempty")
        if primitive_root(self.per) != self.per or (self.pre and self.pre[-1] == self.per[-1]):
            raise DomainError(f"({self.pre!r}, {self.per!r}) is not canonical; use canonicalize()")

    @classmethod
    def parse(cls, text: str) -> "Seq":
        m = _LITERAL.match(text.strip())
        if m is None:
            raise DomainError(f"cannot parse sequence literal {text!r}; expected PRE(PER)")
        return canonicalize(m.group(1), m.group(2))

    def __str__(self) -> str:
        return f"{self.pre}({self.per})"

    def __repr__(self) -> str:
        return f"Seq({str(self)!r})"

    def __len__(self) -> int:
        # description length, i.e. the number of distinct shifts
        return len(self.pre) + len(self.per)

    @property
    def is_periodic(self) -> bool:
        return not self.pre

    def prefix(self, n: int) -> Word:
        """First ``n`` symbols as a word."""
        if n <= len(self.pre):
            return self.pre[:n]
        k = n - len(self.pre)
        reps = -(-k // len(self.per))
        return self.pre + (self.per * reps)[:k]

    def first(self) -> str:
        return self.pre[0] if self.pre else self.per[0]

    def __lt__(self, other: "Seq") -> bool:
        return lex_compare(self, other) < 0

    def __le__(self, other: "Seq") -> bool:
        return lex_compare(self, other) <= 0

    def __gt__(self, other: "Seq") -> bool:
        return lex_compare(self, other) > 0

    def __ge__(self, other: "Seq") -> bool:
        return lex_compare(self, other) >= 0


def canonicalize(pre: Word, per: Word) -> Seq:
    """Canonical :class:`Seq` denoting ``pre · per^∞``."""
    _check_word(pre, "preperiod")
    _check_word(per, "period")
    if not per:
        raise DomainError("period must be nonempty")
    per = primitive_root(per)
    # rolling the period backwards absorbs matching preperiod symbols
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = per[-1] + per[:-1]
    return Seq(pre, per)


def seq(text: str) -> Seq:
    """Shorthand for :meth:`Seq.parse`."""
    return Seq.parse(text)


def periodic(w: Word) -> Seq:
    return canonicalize("", w)


def concat(w: Word, s: Seq) -> Seq:
    """The sequence ``w · s``."""
    return canonicalize(w + s.pre, s.per)


def symbol_at(s: Seq, i: int) -> int:
    """The ``i``-th symbol (1-based)."""
    if i < 1:
        raise DomainError("index must be >= 1")
    if i <= len(s.pre):
        return int(s.pre[i - 1])
    return int(s.per[(i - len(s.pre) - 1) % len(s.per)])


def shift(s: Seq, n: int = 1) -> Seq:
    """``σ^n(s)``."""
    if n < 0:
        raise DomainError("shift count must be >= 0")
    if n <= len(s.pre):
        return Seq(s.pre[n:], s.per)
    k = (n - len(s.pre)) % len(s.per)
    return Seq("", s.per[k:] + s.per[:k])


def shifts(s: Seq) -> list[Seq]:
    """All distinct shifts ``σ^0(s), ..., σ^{len(s)-1}(s)``."""
    return [shift(s, n) for n in range(len(s))]


def _decision_length(x: Seq, y: Seq) -> int:
    return max(len(x.pre), len(y.pre)) + lcm(len(x.per), len(y.per))


def first_difference(x: Seq, y: Seq) -> int | None:
    """1-based index of the first disagreement, or ``None`` if equal."""
    if x == y:
        return None
    n = _decision_length(x, y)
    px, py = x.prefix(n), y.prefix(n)
    for i in range(n):
        if px[i] != py[i]:
            return i + 1
    raise AssertionError("distinct canonical sequences must differ within the decision length")


def lex_compare(x: Seq, y: Seq) -> int:
    """-1, 0 or 1 as ``x`` is lexicographically below, equal to or above ``y``."""
    i = first_difference(x, y)
    if i is None:
        return 0
    return -1 if symbol_at(x, i) < symbol_at(y, i) else 1


def metric_distance(x: Seq, y: Seq) -> Fraction:
    """``2^{-m+1}`` where ``m`` is the first disagreement index, ``0`` if equal."""
    m = first_difference(x, y)
    if m is None:
        return Fraction(0)
    return Fraction(1, 2 ** (m - 1))


def is_self_admissible(s: Seq, side: Literal["upper", "lower"] = "upper") -> bool:
    """Whether ``σ(s)`` is the smallest (upper) or largest (lower) of all shifts of ``s``."""
    first = shift(s, 1)
    if side == "upper":
        return all(first <= t for t in shifts(s))
    if side == "lower":
        return all(t <= first for t in shifts(s))
    raise DomainError(f"side must be 'upper' or 'lower', not {side!r}")


def substitute_word(w: Word, w1: Word, w0: Word) -> Word:
    return "".join(w1 if ch == "1" else w0 for ch in w)


def substitute(s: Seq, w1: Word, w0: Word) -> Seq:
    """Replace every 1 by ``w1`` and every 0 by ``w0``."""
    if not w1 or not w0:
        raise DomainError("replacement words must be nonempty")
    _check_word(w1, "replacement")
    _check_word(w0, "replacement")
    return canonicalize(substitute_word(s.pre, w1, w0), substitute_word(s.per, w1, w0))
