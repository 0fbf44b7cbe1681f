"""Linear mod-one maps ``T(x) = βx + α (mod 1)`` and their symbolic coding.

Every operation is generic over the number type of ``beta``: ``float`` uses a
``1e-9`` tolerance against the critical point, :class:`fractions.Fraction`
is exact, and ``mpmath.mpf`` uses a tolerance of half the working digits.
High precision matters for kneading invariants, since errors grow like β^n
along an orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

import mpmath

from .admissibility import KneadingPair
from .errors import DomainError, UndetectedPeriodError
from .seqcore import Seq, canonicalize, shifts

Number = Union[float, Fraction, "mpmath.mpf"]
Side = Literal["plus", "minus", "point"]

FLOAT_TOL = 1e-9
SERIES_TOL = 1e-14


def default_tol(x: Number) -> Number:
    if isinstance(x, Fraction):
        return Fraction(0)
    if isinstance(x, mpmath.mpf):
        return mpmath.mpf(10) ** (-(mpmath.mp.dps // 2))
    return FLOAT_TOL


@dataclass(frozen=True)
class LinearModOneMap:
    beta: Number
    alpha: Number

    def __post_init__(self):
        if not 1 <= self.beta <= 2:
            raise DomainError(f"beta={self.beta} outside [1, 2]")
        if not 0 <= self.alpha <= 2 - self.beta:
            raise DomainError(f"alpha={self.alpha} outside [0, 2 - beta]")
        if self.beta == 1 and not 0 < self.alpha < 1:
            raise DomainError("beta = 1 is only a rotation by alpha in (0, 1)")

    @property
    def tol(self) -> Number:
        return default_tol(self.beta)


@dataclass(frozen=True)
class Hole:
    a: Number
    b: Number

    def __post_init__(self):
        if self.a == self.b or not 0 <= self.a <= self.b <= 1:
            raise DomainError(f"hole ({self.a}, {self.b}) needs 0 <= a < b <= 1")


def critical_point(m: LinearModOneMap) -> Number:
    return (1 - m.alpha) / m.beta


def evaluate(m: LinearModOneMap, x: Number, side: Side = "point") -> Number:
    """``T(x)``; at ``x = c`` the ``minus`` side returns 1, otherwise 0."""
    if not 0 <= x <= 1:
        raise DomainError(f"x={x} outside [0, 1]")
    y = m.beta * x + m.alpha
    if side == "minus" and abs(x - critical_point(m)) <= m.tol:
        return y
    return y - 1 if y >= 1 else y


def _orbit_step(m: LinearModOneMap, c: Number, x: Number, side: Side) -> tuple[str, Number]:
    if abs(x - c) <= m.tol:
        if side == "plus":
            return "1", type(x)(0) if not isinstance(x, float) else 0.0
        if side == "minus":
            return "0", type(x)(1) if not isinstance(x, float) else 1.0
        raise DomainError(f"orbit hits the critical point at x={x}; choose a side")
    if x < c:
        return "0", m.beta * x + m.alpha
    return "1", m.beta * x + m.alpha - 1


def itinerary(m: LinearModOneMap, x: Number, side: Side, n: int) -> str:
    """First ``n`` symbols of the coding of ``x``.

    ``plus``/``minus`` resolve every hit of ``c`` by the right/left limit, the
    same side persisting along the orbit; ``point`` raises on a hit.
    """
    if n < 1:
        raise DomainError("length must be >= 1")
    if not 0 <= x <= 1:
        raise DomainError(f"x={x} outside [0, 1]")
    c = critical_point(m)
    out = []
    for _ in range(n):
        a, x = _orbit_step(m, c, x, side)
        out.append(a)
    return "".join(out)


def _coded_orbit(m: LinearModOneMap, side: Side, n: int, start: Number | None = None) -> Seq:
    c = critical_point(m)
    tol = m.tol
    # bucket keys at scale 1/tol (or exact values) make recurrence lookup O(1)
    exact = isinstance(c, Fraction)
    scale = None if exact else 1 / (tol if tol else FLOAT_TOL)
    seen: dict = {}
    symbols: list[str] = []
    x = c if start is None else start
    for i in range(n):
        key = x if exact else int(mpmath.floor(x * scale)) if isinstance(x, mpmath.mpf) else math.floor(x * scale)
        hit = None
        if exact:
            hit = seen.get(key)
        else:
            for k in (key - 1, key, key + 1):
                j = seen.get(k)
                if j is not None and abs(j[1] - x) <= tol:
                    hit = j[0]
                    break
        if hit is not None:
            word = "".join(symbols)
            return canonicalize(word[:hit], word[hit:])
        seen[key] = i if exact else (i, x)
        a, x = _orbit_step(m, c, x, side)
        symbols.append(a)
    raise UndetectedPeriodError(f"no recurrence within {n} iterates", ("".join(symbols), ""))


def code_of_point(m: LinearModOneMap, x: Number, side: Side = "plus", n: int = 4096) -> Seq:
    """Eventually periodic itinerary of ``x``, read off an orbit recurrence.

    Exact (``Fraction``) input always recurs for rational data; otherwise
    :class:`UndetectedPeriodError` is raised after ``n`` iterates.
    """
    if not 0 <= x <= 1:
        raise DomainError(f"x={x} outside [0, 1]")
    return _coded_orbit(m, side, n, x)


def kneading_invariants_numeric(m: LinearModOneMap, n: int = 4096) -> KneadingPair:
    """``(τ(c+), τ(c-))`` with the eventual period read off an orbit recurrence."""
    if n < 16:
        raise DomainError("need at least 16 iterates")
    try:
        kp = _coded_orbit(m, "plus", n)
    except UndetectedPeriodError as e:
        raise UndetectedPeriodError(str(e) + " on the upper orbit",
                                    (e.prefixes[0], itinerary(m, critical_point(m), "minus", n))) from None
    try:
        km = _coded_orbit(m, "minus", n)
    except UndetectedPeriodError as e:
        raise UndetectedPeriodError(str(e) + " on the lower orbit", (kp.prefix(n), e.prefixes[0])) from None
    return KneadingPair(kp, km)


def _series(beta: Number, s: Seq, shift_off: Number) -> Number:
    """``Σ_{i>=0} (s_i - shift_off) / β^i`` in closed form."""
    one = beta / beta
    total = 0 * beta
    p = one
    for ch in s.pre:
        total += (int(ch) - shift_off) * p
        p /= beta
    per_sum = 0 * beta
    q = one
    for ch in s.per:
        per_sum += (int(ch) - shift_off) * q
        q /= beta
    return total + p * per_sum / (1 - q)


def point_from_code(m: LinearModOneMap, s: Seq) -> Number:
    """The point whose orbit is coded by ``s``: ``x = Σ_{n>=0} (s_n - α)/β^{n+1}``.

    Raises :class:`DomainError` when some shift of ``s`` lands on the wrong
    side of ``c``, i.e. ``s`` is not a coding under this map.
    """
    if not m.beta > 1:
        raise DomainError("point_from_code needs beta > 1")
    c, tol = critical_point(m), m.tol
    for k, t in enumerate(shifts(s)):
        x = _series(m.beta, t, m.alpha) / m.beta
        ok = (-tol <= x <= 1 + tol) and (x >= c - tol if t.first() == "1" else x <= c + tol)
        if not ok:
            raise DomainError(f"{s} is not a coding for {m}: shift {k} gives x={x}")
    return _series(m.beta, s, m.alpha) / m.beta


def survivor_member(m: LinearModOneMap, h: Hole, x: Number, n: int = 64) -> bool:
    """Whether the first ``n`` iterates of ``x`` stay within ``[T(b), T(a)]``.

    With ``a = c`` only the lower bound ``T(b)`` applies; with ``b = c`` only the
    upper bound ``T(a)``.  A finite-depth approximation of survival.
    """
    if not 0 <= x <= 1:
        raise DomainError(f"x={x} outside [0, 1]")
    c = critical_point(m)
    lo = evaluate(m, h.b) if h.b > c else None
    hi = m.beta * h.a + m.alpha if h.a < c else None
    for _ in range(n):
        if (lo is not None and x < lo) or (hi is not None and x > hi):
            return False
        x = evaluate(m, x)
    return True


def alpha_from_kneading(beta: Number, k: Seq) -> Number:
    """``α = (β - 1)(Σ_{i>=0} k_i / β^i - 1)``, summed in closed form."""
    if not beta > 1:
        raise DomainError("alpha_from_kneading needs beta > 1")
    return (beta - 1) * (_series(beta, k, 0) - 1)


def params_from_pair(p: KneadingPair, check_tol: float = 1e-8) -> tuple[float, float]:
    """``(β, α)`` of the linear mod-one map with kneading invariants ``p``."""
    from .entropy import entropy_determinant
    from .renorm import is_linearizable

    if not is_linearizable(p):
        raise DomainError(f"{p} is not linearizable")
    res = entropy_determinant(p)
    beta = 1 / res.bracket.value if res.scale == 1 else math.exp(res.value)
    a_up = alpha_from_kneading(beta, p.upper)
    a_lo = alpha_from_kneading(beta, p.lower)
    if abs(a_up - a_lo) > check_tol:
        raise DomainError(f"alpha from k+ ({a_up}) and k- ({a_lo}) disagree for {p}")
    return beta, (a_up + a_lo) / 2
