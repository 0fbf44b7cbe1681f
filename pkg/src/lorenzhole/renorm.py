"""Combinatorial renormalization of kneading pairs.

A pair ``(k+, k-)`` renormalizes via words ``(w+, w-)`` (``w+`` starting
``10``, ``w-`` starting ``01``, both longer than one symbol) when both
sequences split into ``w+``/``w-`` blocks, ``k+`` beginning ``w+ w-`` and
``k-`` beginning ``w- w+``.  Because ``w+`` starts with 1 and ``w-`` with 0,
the block split is forced symbol by symbol, so parsing is a deterministic walk
over the finitely many shifts of an eventually periodic sequence.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .admissibility import KneadingPair, is_hs_admissible, is_weak_admissible
from .errors import DomainError, IndeterminateError
from .seqcore import Seq, Word, canonicalize, concat, periodic, shift, substitute

log = logging.getLogger(__name__)

DEFAULT_DEPTH = 64


@dataclass(frozen=True)
class RenormWords:
    wplus: Word
    wminus: Word

    def __post_init__(self):
        if not self.wplus.startswith("10") or not self.wminus.startswith("01"):
            raise DomainError(f"renormalization words {self} must start with 10 and 01")

    def __str__(self) -> str:
        return f"({self.wplus},{self.wminus})"

    @property
    def length(self) -> int:
        return len(self.wplus)


class StepKind(str, Enum):
    PERIODIC = "periodic"
    NONPERIODIC = "nonperiodic"


class Terminal(str, Enum):
    PRIME = "prime"
    NONPERIODIC_STOP = "nonperiodic-stop"
    DEPTH_EXCEEDED = "depth-exceeded"


@dataclass(frozen=True)
class RenormStep:
    words: RenormWords
    kind: StepKind
    residual: KneadingPair
    # True when found through one of the weak-admissible boundary templates
    extended: bool = False


@dataclass(frozen=True)
class RenormChain:
    pair: KneadingPair
    steps: tuple[RenormStep, ...]
    terminal: Terminal
    residual: KneadingPair

    @property
    def periodic_steps(self) -> tuple[RenormStep, ...]:
        return tuple(s for s in self.steps if s.kind is StepKind.PERIODIC)

    @property
    def nonperiodic_step(self) -> Optional[RenormStep]:
        if self.steps and self.steps[-1].kind is StepKind.NONPERIODIC:
            return self.steps[-1]
        return None

    def report(self) -> str:
        lines = [f"pair {self.pair.upper} {self.pair.lower}"]
        for i, st in enumerate(self.steps, 1):
            tag = " extended" if st.extended else ""
            lines.append(f"step {i} {st.words.wplus} {st.words.wminus} {st.kind.value}{tag} "
                         f"{st.residual.upper} {st.residual.lower}")
        lines.append(f"terminal {self.terminal.value}")
        lines.append(f"residual {self.residual.upper} {self.residual.lower}")
        return "\n".join(lines) + "\n"


def star_product(w: RenormWords, p: KneadingPair) -> KneadingPair:
    """``(w+, w-) * (upper, lower)``: substitute 1 → w+, 0 → w- in both sequences."""
    return KneadingPair(substitute(p.upper, w.wplus, w.wminus),
                        substitute(p.lower, w.wplus, w.wminus))


def parse_blocks(s: Seq, w1: Word, w0: Word) -> Optional[Seq]:
    """The sequence ``r`` with ``substitute(r, w1, w0) == s``, if the block split exists."""
    n_pre = len(s.pre)

    def norm(pos: int) -> int:
        return pos if pos < n_pre else n_pre + (pos - n_pre) % len(s.per)

    out: list[str] = []
    visited: dict[int, int] = {}
    pos = 0
    while pos not in visited:
        visited[pos] = len(out)
        sym = s.prefix(pos + 1)[-1]
        block = w1 if sym == "1" else w0
        if s.prefix(pos + len(block))[pos:] != block:
            return None
        out.append(sym)
        pos = norm(pos + len(block))
    i = visited[pos]
    word = "".join(out)
    return canonicalize(word[:i], word[i:])


def is_rational_words(w: RenormWords) -> bool:
    """Whether ``(w+^∞, w-^∞)`` are kneading invariants of a rational rotation."""
    vp, um = w.wplus, w.wminus
    if len(vp) != len(um):
        return False
    if vp[:2] != "10" or um[:2] != "01" or vp[2:] != um[2:]:
        return False
    pp = periodic(vp)
    target = periodic(um)
    return any(shift(pp, s) == target for s in range(len(vp)))


def _candidates(p: KneadingPair, proper: bool = True):
    """Word pairs (prefixes of ``k+`` and ``k-``) that could split ``p``.

    A proper split has ``k+ = w+ w- ...`` and ``k- = w- w+ ...``.  With
    ``proper=False`` only the boundary forms ``k+ = w+ k-`` or ``k- = w- k+``
    are considered.
    """
    n = len(p.upper) + len(p.lower) + 1
    up, lo = p.upper.prefix(2 * n), p.lower.prefix(2 * n)
    if up[1] != "0" or lo[1] != "1":
        return
    if not proper:
        a_ok = {k for k in range(2, len(p.upper) + 1) if shift(p.upper, k) == p.lower}
        b_ok = {k for k in range(2, len(p.lower) + 1) if shift(p.lower, k) == p.upper}
    for lp in range(2, len(p.upper) + 1):
        wp = up[:lp]
        for lm in range(2, len(p.lower) + 1):
            wm = lo[:lm]
            if proper:
                if up[lp:lp + lm] != wm or lo[lm:lm + lp] != wp:
                    continue
            elif lp not in a_ok and lm not in b_ok:
                continue
            # words whose periodizations are not themselves a weak-admissible
            # pair split the sequences formally but do not come from a
            # renormalization interval
            if not is_weak_admissible(KneadingPair(periodic(wp), periodic(wm))):
                continue
            yield RenormWords(wp, wm)


def _block_parse(p: KneadingPair, w: RenormWords) -> Optional[KneadingPair]:
    ru = parse_blocks(p.upper, w.wplus, w.wminus)
    if ru is None:
        return None
    rl = parse_blocks(p.lower, w.wplus, w.wminus)
    if rl is None:
        return None
    return KneadingPair(ru, rl)


def factorizations(p: KneadingPair) -> list[tuple[RenormWords, KneadingPair]]:
    """Every proper factorization ``p = W * r`` with ``r`` starting (10, 01), ordered by size."""
    found = []
    for w in _candidates(p):
        r = _block_parse(p, w)
        if r is None or r.upper.prefix(2) != "10" or r.lower.prefix(2) != "01":
            continue
        found.append((w, r))
    found.sort(key=lambda wr: (len(wr[0].wplus) + len(wr[0].wminus), len(wr[0].wplus)))
    return found


def factorize_once(p: KneadingPair) -> Optional[tuple[RenormWords, KneadingPair]]:
    """Minimal factorization ``p = W * r``; ties go to the shorter ``w+``."""
    found = factorizations(p)
    if not found:
        return None
    best = found[0]
    size = len(best[0].wplus) + len(best[0].wminus)
    ties = [w for w, _ in found if len(w.wplus) + len(w.wminus) == size]
    if len(ties) > 1:
        log.info("multiple minimal factorizations for %s: %s", p, ", ".join(map(str, ties)))
    assert star_product(best[0], best[1]) == p
    return best


def _extended_parse(p: KneadingPair) -> Optional[tuple[RenormWords, KneadingPair]]:
    for w in sorted(_candidates(p, proper=False), key=lambda w: (len(w.wplus) + len(w.wminus), len(w.wplus))):
        if is_rational_words(w):
            continue
        r = _block_parse(p, w)
        if r is None:
            continue
        if r.upper.prefix(2) == "10" and r.lower.prefix(2) == "01":
            continue  # a proper factorization, not a boundary form
        if r.upper == concat("1", r.lower) or r.lower == concat("0", r.upper):
            return w, r
    return None


def detect_extended_nonperiodic(p: KneadingPair) -> Optional[RenormWords]:
    """Words witnessing a boundary form ``(w+ k-, k-)`` or ``(k+, w- k+)``.

    These include ``(w+ w-^∞, w-^∞)`` and ``(w+^∞, w- w+^∞)``.  Only
    non-rational words count.  Returns ``None`` when a proper factorization
    exists, since :func:`factorize_once` handles that pair.
    """
    if factorize_once(p) is not None:
        return None
    hit = _extended_parse(p)
    return hit[0] if hit else None


def boundary_form(p: KneadingPair) -> Optional[str]:
    """``"wplus-lower"`` for ``(w+ k-, k-)``, ``"wminus-upper"`` for ``(k+, w- k+)``."""
    hit = _extended_parse(p)
    if hit is None:
        return None
    _, r = hit
    return "wplus-lower" if r.upper == concat("1", r.lower) else "wminus-upper"


def renorm_chain(p: KneadingPair, max_depth: int = DEFAULT_DEPTH) -> RenormChain:
    if max_depth < 1:
        raise DomainError("max_depth must be >= 1")
    steps: list[RenormStep] = []
    cur = p
    for _ in range(max_depth):
        hit = factorize_once(cur)
        extended = False
        if hit is None:
            hit = _extended_parse(cur)
            extended = True
        if hit is None:
            return RenormChain(p, tuple(steps), Terminal.PRIME, cur)
        w, r = hit
        kind = StepKind.PERIODIC if is_rational_words(w) else StepKind.NONPERIODIC
        steps.append(RenormStep(w, kind, r, extended))
        if kind is StepKind.NONPERIODIC:
            return RenormChain(p, tuple(steps), Terminal.NONPERIODIC_STOP, r)
        cur = r
    return RenormChain(p, tuple(steps), Terminal.DEPTH_EXCEEDED, cur)


def is_prime(p: KneadingPair) -> bool:
    return factorize_once(p) is None and detect_extended_nonperiodic(p) is None


def is_linearizable(p: KneadingPair, max_depth: int = DEFAULT_DEPTH) -> bool:
    """H-S admissible, finitely many renormalizations all periodic, positive entropy.

    Raises :class:`IndeterminateError` when the chain outgrows ``max_depth``.
    """
    from .entropy import entropy_determinant

    if not is_hs_admissible(p):
        return False
    chain = renorm_chain(p, max_depth)
    if chain.terminal is Terminal.DEPTH_EXCEEDED:
        raise IndeterminateError(f"renormalization chain of {p} exceeds depth {max_depth}")
    if chain.terminal is not Terminal.PRIME:
        return False
    return entropy_determinant(p).value > 0
