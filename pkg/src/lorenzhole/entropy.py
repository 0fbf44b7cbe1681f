"""Topological entropy of Ω(k+, k-).

Three routes, kept independent of each other:

* :func:`entropy_determinant` -- smallest root of the kneading determinant,
  made renormalization-aware (non-periodic shortcut, periodic length scaling);
* :func:`entropy_spectral` -- Perron root of the subshift automaton;
* :func:`entropy_wordcount` -- ``log #Ω|_n / n``, an upper bound.

Polynomials are exact (integer coefficients, ascending degree); floating point
enters only when the final isolating bracket is turned into a number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .admissibility import KneadingPair, is_weak_admissible
from .errors import DomainError, IndeterminateError
from .renorm import RenormChain, Terminal, renorm_chain
from .seqcore import Seq, periodic
from .subshift import build_automaton, count_words, normalize_hole_pair

ROOT_WIDTH = Fraction(1, 10**12)


# ---------------------------------------------------------------- polynomials

@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_word(cls, w: str) -> "IntPolynomial":
        return cls(tuple(int(ch) for ch in w))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by ``t^k``."""
        return IntPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def sign_at(self, t: Fraction) -> int:
        v = self(t)
        return (v > 0) - (v < 0)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out


def _fdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _to_int_primitive(c: list[Fraction]) -> IntPolynomial:
    if not c:
        return IntPolynomial(())
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return IntPolynomial(tuple(int(x * den) for x in c)).primitive()


def _positive_scaled(c: list[Fraction]) -> IntPolynomial:
    """Integer multiple of ``c`` by a positive factor (keeps signs, unlike :meth:`primitive`)."""
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = math.gcd(*ints) or 1
    return IntPolynomial(tuple(v // g for v in ints))


def poly_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    return _fdivmod([Fraction(x) for x in a.coeffs], [Fraction(x) for x in b.coeffs])


def exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    q, r = poly_divmod(a, b)
    if r or any(x.denominator != 1 for x in q):
        raise ArithmeticError(f"{b} does not divide {a} over the integers")
    return IntPolynomial(tuple(int(x) for x in q))


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    while y:
        _, r = _fdivmod(x, y)
        x, y = y, r
    return _to_int_primitive(x)


@dataclass(frozen=True)
class RationalFn:
    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise DomainError("zero denominator")

    @classmethod
    def reduced(cls, num: IntPolynomial, den: IntPolynomial) -> "RationalFn":
        if num.is_zero():
            return cls(num, IntPolynomial((1,)))
        g = poly_gcd(num, den)
        num, den = exact_div(num, g), exact_div(den, g)
        cn, cd = num.content(), den.content()
        h = math.gcd(cn, cd)
        num = IntPolynomial(tuple(c // h for c in num.coeffs))
        den = IntPolynomial(tuple(c // h for c in den.coeffs))
        if den.coeffs[0] < 0:
            num, den = -num, -den
        return cls(num, den)

    def series(self, n: int) -> list[Fraction]:
        """First ``n`` Taylor coefficients at ``t = 0``."""
        d = self.den.coeffs
        if d[0] == 0:
            raise DomainError("denominator vanishes at 0")
        num = list(self.num.coeffs) + [0] * n
        out: list[Fraction] = []
        for k in range(n):
            acc = Fraction(num[k])
            for j in range(1, min(k, len(d) - 1) + 1):
                acc -= d[j] * out[k - j]
            out.append(acc / d[0])
        return out

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"


# ---------------------------------------------------- kneading determinant

def _seq_series(s: Seq) -> tuple[IntPolynomial, IntPolynomial]:
    """``Σ s_i t^{i-1}`` as numerator/denominator: ``P_u + t^a P_w / (1 - t^q)``."""
    pu = IntPolynomial.from_word(s.pre)
    pw = IntPolynomial.from_word(s.per)
    one_minus = IntPolynomial((1,) + (0,) * (len(s.per) - 1) + (-1,))
    return pu * one_minus + pw.shifted(len(s.pre)), one_minus


def kneading_determinant(p: KneadingPair) -> RationalFn:
    """``K(t) = K+(t) - K-(t)`` in lowest terms."""
    n1, d1 = _seq_series(p.upper)
    n2, d2 = _seq_series(p.lower)
    return RationalFn.reduced(n1 * d2 - n2 * d1, d1 * d2)


# --------------------------------------------------------- root isolation

def _squarefree(p: IntPolynomial) -> IntPolynomial:
    g = poly_gcd(p, p.derivative())
    return exact_div(p, g).primitive() if g.degree > 0 else p.primitive()


def _sturm(p: IntPolynomial) -> list[IntPolynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(-_positive_scaled(r))
    return [q for q in chain if not q.is_zero()]


def _variations(chain: list[IntPolynomial], t: Fraction) -> int:
    signs = [s for s in (q.sign_at(t) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain, lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in ``(lo, hi]``."""
    return _variations(chain, lo) - _variations(chain, hi)


@dataclass(frozen=True)
class RootBracket:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def value(self) -> float:
        return float((self.lo + self.hi) / 2)

    def __contains__(self, t) -> bool:
        return self.lo <= t <= self.hi


def smallest_root(rf: RationalFn, width: Fraction = ROOT_WIDTH) -> RootBracket:
    """Bracket of width <= ``width`` around the smallest root of ``rf.num`` in (0, 1).

    Sturm counting decides where the first root lies; bisection on exact
    dyadic points narrows it.  ``t = 1`` is divided out first.
    """
    if rf.num.is_zero():
        raise DomainError("kneading determinant is identically zero")
    p = _squarefree(rf.num)
    one_minus_t = IntPolynomial((1, -1))
    while p.degree > 0 and p(1) == 0:
        p = exact_div(p, one_minus_t)
    if p.degree < 1:
        raise DomainError("no root in (0, 1)")
    chain = _sturm(p)
    lo, hi = Fraction(0), Fraction(1)
    if _count_roots(chain, lo, hi) == 0:
        raise DomainError("no root in (0, 1)")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if p(mid) == 0:
            return RootBracket(mid, mid)
        if _count_roots(chain, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return RootBracket(lo, hi)


# ------------------------------------------------------------------ entropy

@dataclass(frozen=True)
class EntropyResult:
    value: float
    method: str  # determinant | nonperiodic-shortcut | periodic-scaled
    bracket: Optional[RootBracket] = None
    chain: Optional[RenormChain] = None
    zero_entropy: bool = False
    scale: int = 1

    def report(self) -> str:
        lines = [f"entropy {self.value:.12g}",
                 f"exp_entropy {math.exp(self.value):.12g}",
                 f"method {self.method}"]
        if self.bracket is not None:
            lines.append(f"t0 {self.bracket.value:.12g}")
            lines.append(f"t0_bracket {self.bracket.lo} {self.bracket.hi}")
        if self.zero_entropy:
            lines.append("zero_entropy true")
        if self.chain is not None:
            lines.append(f"chain_steps {len(self.chain.steps)} terminal {self.chain.terminal.value}")
            for st in self.chain.steps:
                lines.append(f"  {st.words.wplus} {st.words.wminus} {st.kind.value}")
        return "\n".join(lines) + "\n"


def omega_entropy(p: KneadingPair) -> EntropyResult:
    """Entropy of Ω(p) for any pair, normalizing to a weak-admissible pair first if needed."""
    if not is_weak_admissible(p):
        p = normalize_hole_pair(p.upper, p.lower)
    return entropy_determinant(p)


def entropy_determinant(p: KneadingPair) -> EntropyResult:
    """Renormalization-aware kneading-determinant entropy of a weak-admissible pair."""
    if not is_weak_admissible(p):
        raise DomainError(f"{p} is not weak-admissible; normalize it first")
    chain = renorm_chain(p)
    if chain.terminal is Terminal.DEPTH_EXCEEDED:
        raise IndeterminateError(f"renormalization chain of {p} exceeds the depth bound")
    scale = 1
    for st in chain.periodic_steps:
        scale *= st.words.length
    step = chain.nonperiodic_step
    if step is not None:
        inner = omega_entropy(KneadingPair(periodic(step.words.wplus), periodic(step.words.wminus)))
        return EntropyResult(inner.value / scale, "nonperiodic-shortcut", inner.bracket, chain,
                             inner.zero_entropy, scale)
    method = "determinant" if scale == 1 else "periodic-scaled"
    try:
        br = smallest_root(kneading_determinant(chain.residual))
    except DomainError:
        return EntropyResult(0.0, method, None, chain, True, scale)
    return EntropyResult(-math.log(br.value) / scale, method, br, chain, False, scale)


def entropy_wordcount(p: KneadingPair, n: int) -> float:
    c = count_words(p, n)
    if c == 0:
        raise DomainError(f"Ω{p} is empty")
    return math.log(c) / n


def entropy_spectral(p: KneadingPair) -> float:
    """log of the spectral radius of the automaton, taken per strongly connected component."""
    import numpy as np
    from scipy.sparse.csgraph import connected_components

    aut = build_automaton(p)
    if aut.empty:
        raise DomainError(f"Ω{p} is empty")
    m = aut.matrix()
    _, labels = connected_components(m, directed=True, connection="strong")
    rho = 0.0
    for lab in set(labels.tolist()):
        idx = np.flatnonzero(labels == lab)
        block = m[np.ix_(idx, idx)]
        if not block.any():
            continue
        rho = max(rho, float(np.max(np.abs(np.linalg.eigvals(block)))))
    return math.log(rho) if rho > 0 else 0.0
