"""Bifurcation sets, entropy plateaus and the E=B test for holes ``(a, b)``.

Holes are given by their codes: ``â = τ(a-)`` starting with 0 and
``b̂ = τ(b+)`` starting with 1.  The survivor set of the hole is coded by
Ω(b̂, â), so "the survivor set does not change" is Ω-equality and "the entropy
does not change" is equality of :func:`~lorenzhole.entropy.omega_entropy`.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .admissibility import KneadingPair, is_degenerate_hole
from .entropy import omega_entropy
from .errors import DomainError, IndeterminateError
from .interval import LinearModOneMap, code_of_point, critical_point
from .renorm import Terminal, boundary_form, is_linearizable, renorm_chain
from .seqcore import Seq, canonicalize, concat, is_self_admissible, periodic, primitive_root, shift, shifts, substitute
from .subshift import extremal_extension, member, normalize_hole_pair, subshift_equal

ZERO_ENTROPY = 1e-12


class PlateauCase(str, Enum):
    NONPERIODIC_RENORM = "nonperiodic-renorm"
    WPLUS_A = "w-plus-a"
    PERIODIC_PRIME = "periodic-prime"
    SINGLETON = "singleton"
    SURVIVOR_SET = "survivor-set"


@dataclass(frozen=True)
class PlateauReport:
    left_code: Seq
    right_code: Seq
    case_tag: PlateauCase
    closed_flags: tuple[bool, bool]
    normalized: Optional[KneadingPair] = None
    # True when the endpoints were computed through periodic renormalization steps
    reduced: bool = False

    def __post_init__(self):
        if self.right_code < self.left_code:
            raise DomainError(f"plateau endpoints out of order: {self.left_code} > {self.right_code}")

    @property
    def is_singleton(self) -> bool:
        return self.left_code == self.right_code

    def contains(self, code: Seq) -> bool:
        lo_ok = self.left_code <= code if self.closed_flags[0] else self.left_code < code
        hi_ok = code <= self.right_code if self.closed_flags[1] else code < self.right_code
        return lo_ok and hi_ok

    def report(self) -> str:
        lb = "[" if self.closed_flags[0] else "("
        rb = "]" if self.closed_flags[1] else ")"
        lines = [f"case {self.case_tag.value}",
                 f"left {self.left_code}",
                 f"right {self.right_code}",
                 f"interval {lb}{self.left_code}, {self.right_code}{rb}"]
        if self.normalized is not None:
            lines.append(f"normalized {self.normalized.upper} {self.normalized.lower}")
        if self.reduced:
            lines.append("reduced through periodic renormalization")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class StaircaseRow:
    b_code: Seq
    b_value: Optional[Fraction]
    entropy: float
    degenerate: bool = False


class Verdict(str, Enum):
    EQUAL = "equal-up-to-bound"
    NOT_EQUAL = "not-equal"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class EBResult:
    verdict: Verdict
    witness: Optional[Seq] = None
    reason: str = ""
    checked: int = 0
    skipped: tuple[Seq, ...] = field(default=(), repr=False)

    def report(self) -> str:
        lines = [f"verdict {self.verdict.value}"]
        if self.witness is not None:
            lines.append(f"witness {self.witness}")
        if self.reason:
            lines.append(f"reason {self.reason}")
        lines.append(f"checked {self.checked}")
        return "\n".join(lines) + "\n"


def in_E(ahat: Seq, bhat: Seq) -> bool:
    """Whether ``σ(b̂) ⪯ σ^n(b̂) ⪯ σ(â)`` for all ``n``, i.e. ``b̂ ∈ Ω(b̂, â)``."""
    return member(KneadingPair(bhat, ahat), bhat)


def _entropy(bhat: Seq, ahat: Seq) -> float:
    return omega_entropy(KneadingPair(bhat, ahat)).value


def _expand(code: Seq, steps) -> Seq:
    for st in reversed(steps):
        code = substitute(code, st.words.wplus, st.words.wminus)
    return code


def plateau_P(ahat: Seq, bhat: Seq, kplus: Optional[Seq] = None) -> PlateauReport:
    """Maximal interval of ``b`` on which the survivor-set entropy is constant.

    ``kplus`` is the ambient upper kneading invariant; pass it when ``a = c``
    so that a periodic ``b̂`` gets the left endpoint ``b̂|_p k+``.
    """
    if is_degenerate_hole(bhat, ahat):
        raise DomainError("degenerate hole")
    if not in_E(ahat, bhat):
        raise DomainError(f"{bhat} is not a bifurcation code for {ahat}")
    norm = normalize_hole_pair(bhat, ahat)
    if omega_entropy(norm).value <= ZERO_ENTROPY:
        raise DomainError(f"Ω({bhat}, {ahat}) has zero entropy")
    chain = renorm_chain(norm)
    if chain.terminal is Terminal.DEPTH_EXCEEDED:
        raise IndeterminateError("renormalization chain exceeds the depth bound")
    periodic_steps = chain.periodic_steps
    step = chain.nonperiodic_step
    if step is not None:
        w = step.words
        right = periodic(w.wplus)
        parent = chain.steps[-2].residual if len(chain.steps) > 1 else norm
        if step.extended and boundary_form(parent) == "wplus-lower":
            left, tag = concat(w.wplus, parent.lower), PlateauCase.WPLUS_A
        else:
            left, tag = concat(w.wplus, periodic(w.wminus)), PlateauCase.NONPERIODIC_RENORM
        return PlateauReport(_expand(left, periodic_steps), _expand(right, periodic_steps), tag,
                             (True, True), norm, bool(periodic_steps))
    up = norm.upper
    if up.is_periodic:
        q = len(up.per)
        if kplus is not None and ahat == norm.lower:
            p = len(bhat.per) if bhat.is_periodic else q
            left = concat(bhat.prefix(p), kplus)
        else:
            left = concat(up.prefix(q), norm.lower)
        return PlateauReport(left, up, PlateauCase.PERIODIC_PRIME, (True, True), norm,
                             bool(periodic_steps))
    return PlateauReport(bhat, bhat, PlateauCase.SINGLETON, (True, True), norm, False)


def _same_survivors(ahat: Seq, ehat: Seq, ref: KneadingPair) -> bool:
    if ehat.first() != "1":
        return False
    return subshift_equal(KneadingPair(ehat, ahat), ref)


def _fit_eventually_periodic(word: str) -> Seq:
    """Shortest ``pre(per)`` description matching ``word`` with the period seen at least twice."""
    n = len(word)
    best = None
    for total in range(1, n + 1):
        for lp in range(1, total + 1):
            lpre = total - lp
            if lpre + 2 * lp > n:
                continue
            per = word[lpre:lpre + lp]
            cand = canonicalize(word[:lpre], per)
            if cand.prefix(n) == word:
                best = cand
                break
        if best is not None:
            return best
    raise IndeterminateError(f"no eventually periodic fit for {word}")


def plateau_I(ahat: Seq, bhat: Seq, ambient: Optional[KneadingPair] = None,
              depth: int = 48) -> PlateauReport:
    """Maximal interval of ``b`` on which the survivor set itself is constant.

    For periodic ``b̂`` the left endpoint is the infimum of the codes ``ε̂`` with
    Ω(ε̂, â) = Ω(b̂, â), found digit by digit: the infimum continues with 0
    exactly when the top of that cylinder (capped at ``b̂``) still gives the
    same Ω.  Only codes of points of the ambient map count, so the cylinder top
    is the largest element of the ambient shift Ω(k+, k-) there; without
    ``ambient`` the full shift (doubling map) is assumed.  The digits are then
    fitted by an eventually periodic code and certified on both sides.
    """
    if ambient is None:
        ambient = KneadingPair(concat("1", periodic("0")), concat("0", periodic("1")))
    if is_degenerate_hole(bhat, ahat):
        raise DomainError("degenerate hole")
    if not in_E(ahat, bhat):
        raise DomainError(f"{bhat} is not a bifurcation code for {ahat}")
    ref = KneadingPair(bhat, ahat)
    if not bhat.is_periodic:
        return PlateauReport(bhat, bhat, PlateauCase.SINGLETON, (True, True))
    def top(word: str) -> Optional[Seq]:
        t = extremal_extension(ambient, word, "max")
        return None if t is None else min(t, bhat)

    prefix = "1"
    while len(prefix) < depth:
        t = top(prefix + "0")
        prefix += "0" if t is not None and _same_survivors(ahat, t, ref) else "1"
    left = _fit_eventually_periodic(prefix)
    # certification: just above the fitted endpoint Ω is unchanged, just below it differs
    probe = len(left) + 2 * len(left.per) + 8
    above = top(left.prefix(probe))
    below = extremal_extension(ambient, left.prefix(probe), "min")
    if (above is None or not _same_survivors(ahat, above, ref)
            or (below is not None and below != left and _same_survivors(ahat, below, ref))):
        raise IndeterminateError(f"left endpoint {left} of I({bhat}) failed certification")
    closed_left = _same_survivors(ahat, left, ref)
    return PlateauReport(left, bhat, PlateauCase.SURVIVOR_SET, (closed_left, True))


def _first_one_at_or_after(b: Seq, n: int, limit: int) -> int:
    while n <= limit:
        if b.prefix(n)[-1] == "1":
            return n
        n += 1
    raise DomainError(f"no symbol 1 in {b} between the search bounds")


def _self_overlap(v: str, n: int) -> int:
    for j in range(1, n):
        if v[:n - j] == v[j:n]:
            return j
    return n


def _approximant_words(bhat: Seq, nmin: int, limit: int):
    """Yield ``(n, j, r)`` for the construction at every admissible ``n >= nmin``."""
    v = bhat.prefix(4 * limit)
    n = nmin
    while n <= limit:
        n = _first_one_at_or_after(bhat, max(n, 1), limit)
        j = _self_overlap(v, n)
        k = next((k for k in range(1, len(v) - j + 1) if v[k - 1] != v[k - 1 + j]), None)
        if k is not None and v[k - 1] == "0" and v[k - 1 + j] == "1":
            yield n, j, k - 1 + j
        n += 1


def _check_approx_input(bhat: Seq) -> None:
    if bhat.is_periodic:
        raise DomainError(f"{bhat} is periodic")
    if bhat.first() != "1" or not is_self_admissible(bhat, "upper"):
        raise DomainError(f"{bhat} is not a self-admissible upper sequence")
    if bhat == concat("1", periodic("0")):
        raise DomainError("1(0) has no periodic approximant")


def periodic_approximant(bhat: Seq, nmin: int) -> Seq:
    """Periodic self-admissible code agreeing with ``b̂`` on at least ``nmin`` symbols."""
    _check_approx_input(bhat)
    if nmin < 1:
        raise DomainError("nmin must be >= 1")
    limit = nmin + 4 * len(bhat) + 8
    for _, _, r in _approximant_words(bhat, nmin, limit):
        return periodic(bhat.prefix(r))
    raise DomainError(f"approximant construction for {bhat} did not close within {limit} symbols")


def _violates(ahat: Seq, cand: Seq) -> bool:
    return any(t.first() == "1" and t < cand for t in shifts(ahat))


def nonadmissible_periodic_approximant(bhat: Seq, ahat: Seq) -> Seq:
    """Periodic self-admissible ``b̂'`` near ``b̂`` such that ``(b̂', â)`` is not admissible.

    Either some shift of ``â`` starting with 1 already lies below ``b̂``, or
    ``â = w b̂`` for a word ``w``; in the latter case the candidates
    ``(v_1 … v_{r-j})^∞`` lie above ``b̂``.
    """
    _check_approx_input(bhat)
    if ahat.first() != "0":
        raise DomainError(f"{ahat} must start with 0")
    below = _violates(ahat, bhat)
    tail = any(shift(ahat, i) == bhat for i in range(1, len(ahat)))
    if not below and not tail:
        raise DomainError(f"({bhat}, {ahat}) is admissible and â is not a word followed by b̂")
    limit = 4 * (len(bhat) + len(ahat)) + 16
    v = bhat.prefix(4 * limit)
    for n, j, r in _approximant_words(bhat, 2, limit):
        words = [v[:n], v[:r - j]] if below else [v[:r - j], v[:n]]
        for w in words:
            if not w.startswith("10"):
                continue
            cand = periodic(primitive_root(w))
            if is_self_admissible(cand, "upper") and _violates(ahat, cand):
                return cand
    raise DomainError(f"no non-admissible periodic approximant within {limit} symbols")


def _periodic_codes(bound: int):
    for length in range(1, bound + 1):
        for bits in itertools.product("01", repeat=length - 1):
            w = "1" + "".join(bits)
            if primitive_root(w) == w:
                yield periodic(w)


def eb_equal_test(kpair: KneadingPair, a_code: Optional[Seq] = None,
                  period_bound: int = 12, max_depth: int = 64) -> EBResult:
    """Bounded test of E(a) = B(a) through periodic bifurcation codes.

    For ``a = c`` (``â = k-``) every periodic self-admissible ``b̂`` of period at
    most ``period_bound`` with ``b̂ ∈ E`` and positive entropy is checked for
    linearizability of ``(b̂, k-)``; the first failure is the witness.
    Zero-entropy codes are skipped since linearizability asks for positive
    entropy of a full plateau, not of a collapsed survivor set.
    """
    if a_code is not None and a_code != kpair.lower:
        return EBResult(Verdict.NOT_EQUAL, None, "a≠c: some bifurcation point has an entropy plateau")
    kminus = kpair.lower
    indeterminate = False
    checked = 0
    skipped: list[Seq] = []
    for b in sorted(_periodic_codes(period_bound), key=lambda s: (len(s.per), s.per)):
        if not is_self_admissible(b, "upper") or b < kpair.upper or not member(kpair, b):
            continue
        if is_degenerate_hole(b, kminus) or not in_E(kminus, b):
            continue
        try:
            h = omega_entropy(KneadingPair(b, kminus)).value
        except DomainError:
            h = 0.0
        if h <= ZERO_ENTROPY:
            skipped.append(b)
            continue
        checked += 1
        try:
            ok = is_linearizable(KneadingPair(b, kminus), max_depth)
        except IndeterminateError:
            indeterminate = True
            continue
        if not ok:
            return EBResult(Verdict.NOT_EQUAL, b, "(b̂, k-) is not linearizable", checked, tuple(skipped))
    verdict = Verdict.INDETERMINATE if indeterminate else Verdict.EQUAL
    return EBResult(verdict, None, f"period bound {period_bound}", checked, tuple(skipped))


def _row(bhat: Seq, ahat: Seq, value: Optional[Fraction]) -> StaircaseRow:
    try:
        h = omega_entropy(KneadingPair(bhat, ahat)).value
        return StaircaseRow(bhat, value, max(h, 0.0))
    except DomainError:
        return StaircaseRow(bhat, value, 0.0, degenerate=True)


def staircase(kpair: KneadingPair, a_code: Seq, grid: int,
              map: Optional[LinearModOneMap] = None, depth: int = 12) -> list[StaircaseRow]:
    """Entropy of the survivor set as ``b`` sweeps ``[c, 1]``.

    With ``map`` the ``b`` values are ``grid`` equally spaced rationals coded
    exactly; otherwise ``grid`` periodic codes of the ambient shift with
    period at most ``depth`` are sampled evenly in lexicographic order.
    Rows come back sorted by code.
    """
    if grid < 2:
        raise DomainError("grid must be >= 2")
    rows = []
    if map is not None:
        beta, alpha = Fraction(map.beta), Fraction(map.alpha)
        exact = LinearModOneMap(beta, alpha)
        c = critical_point(exact)
        for i in range(grid):
            b = c + (1 - c) * Fraction(i, grid - 1)
            rows.append(_row(code_of_point(exact, b, "plus"), a_code, b))
    else:
        codes = sorted({b for b in _periodic_codes(depth) if b >= kpair.upper and member(kpair, b)})
        if not codes:
            raise DomainError("no periodic codes in range")
        picks = sorted({round(i * (len(codes) - 1) / (grid - 1)) for i in range(grid)})
        rows = [_row(codes[i], a_code, None) for i in picks]
    rows.sort(key=lambda r: (r.b_code, r.b_value or 0))
    return rows


def staircase_csv(rows: list[StaircaseRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["b_code", "b_value", "entropy"])
    for r in rows:
        val = "" if r.b_value is None else f"{float(r.b_value):.12g}"
        w.writerow([str(r.b_code), val, f"{r.entropy:.12g}"])
    return buf.getvalue()
