"""Automaton presentation of the two-sided lexicographic subshift Ω(upper, lower).

Ω(upper, lower) is the set of binary sequences ω with
``σ(upper) ⪯ σ^n(ω) ⪯ σ(lower)`` for every ``n >= 0``.

Reading ω symbol by symbol, all pending lower-bound constraints collapse to a
single one: the tightest shift of ``σ(upper)`` that the read suffix still
matches, and likewise for the upper bound.  A state is therefore a pair of
remainders (each a shift of the bound, or ``None`` when no constraint is
tight), which keeps the automaton finite for eventually periodic bounds.
After construction, states without an infinite continuation are trimmed so
that accepted words are exactly the words of Ω.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal, Optional

from .admissibility import KneadingPair, is_degenerate_hole
from .errors import DomainError
from .seqcore import Seq, canonicalize, shift

State = tuple[Optional[Seq], Optional[Seq]]
START: State = (None, None)


@dataclass(frozen=True)
class SubshiftAutomaton:
    pair: KneadingPair
    states: tuple[State, ...]
    delta: dict = field(repr=False)

    @property
    def empty(self) -> bool:
        return not self.states

    def step(self, q: State, a: str) -> State | None:
        return self.delta.get((q, a))

    def matrix(self):
        """Transition count matrix over ``states`` (numpy array)."""
        import numpy as np

        index = {q: i for i, q in enumerate(self.states)}
        m = np.zeros((len(self.states), len(self.states)))
        for (q, _), r in self.delta.items():
            m[index[q], index[r]] += 1
        return m


def _raw_step(lo_bound: Seq, hi_bound: Seq, q: State, a: str) -> State | None:
    lo, hi = q
    lo_eff = lo_bound if lo is None or lo < lo_bound else lo
    hi_eff = hi_bound if hi is None or hi > hi_bound else hi
    lf, hf = lo_eff.first(), hi_eff.first()
    if a < lf or a > hf:
        return None
    return (shift(lo_eff) if a == lf else None, shift(hi_eff) if a == hf else None)


@lru_cache(maxsize=4096)
def build_automaton(p: KneadingPair) -> SubshiftAutomaton:
    lo_bound, hi_bound = p.bounds
    delta: dict = {}
    seen = {START}
    queue = deque([START])
    while queue:
        q = queue.popleft()
        for a in "01":
            r = _raw_step(lo_bound, hi_bound, q, a)
            if r is None:
                continue
            delta[(q, a)] = r
            if r not in seen:
                seen.add(r)
                queue.append(r)

    # trim states with no infinite continuation
    alive = set(seen)
    changed = True
    while changed:
        changed = False
        for q in list(alive):
            if not any(delta.get((q, a)) in alive for a in "01"):
                alive.discard(q)
                changed = True
    # keep only states reachable from the start through alive states
    reachable = []
    if START in alive:
        reachable = [START]
        marked = {START}
        i = 0
        while i < len(reachable):
            q = reachable[i]
            i += 1
            for a in "01":
                r = delta.get((q, a))
                if r in alive and r not in marked:
                    marked.add(r)
                    reachable.append(r)
    keep = set(reachable)
    trimmed = {k: v for k, v in delta.items() if k[0] in keep and v in keep}
    return SubshiftAutomaton(p, tuple(reachable), trimmed)


def count_words(p: KneadingPair, n: int) -> int:
    """``#Ω|_n`` by path counting."""
    if n < 1:
        raise DomainError("word length must be >= 1")
    aut = build_automaton(p)
    if aut.empty:
        return 0
    counts = {START: 1}
    for _ in range(n):
        nxt: dict = {}
        for q, c in counts.items():
            for a in "01":
                r = aut.step(q, a)
                if r is not None:
                    nxt[r] = nxt.get(r, 0) + c
        counts = nxt
    return sum(counts.values())


def words(p: KneadingPair, n: int) -> list[str]:
    """All words of Ω|_n in lexicographic order (small ``n`` only)."""
    aut = build_automaton(p)
    if aut.empty:
        return []
    out = [("", START)]
    for _ in range(n):
        out = [(w + a, aut.step(q, a)) for w, q in out for a in "01" if aut.step(q, a) is not None]
    return [w for w, _ in out]


def member(p: KneadingPair, w: Seq) -> bool:
    lo, hi = p.bounds
    return all(lo <= shift(w, n) <= hi for n in range(len(w)))


def _product_walk(p1: KneadingPair, p2: KneadingPair, mode: Literal["equal", "subset"]) -> bool:
    a1, a2 = build_automaton(p1), build_automaton(p2)
    s1 = START if not a1.empty else None
    s2 = START if not a2.empty else None
    if s1 is None:
        return s2 is None or mode == "subset"
    if s2 is None:
        return False
    seen = {(s1, s2)}
    queue = deque(seen)
    while queue:
        q1, q2 = queue.popleft()
        for a in "01":
            r1, r2 = a1.step(q1, a), a2.step(q2, a)
            if r1 is None and r2 is None:
                continue
            if r2 is None or (r1 is None and mode == "equal"):
                return False
            if r1 is None:
                continue
            if (r1, r2) not in seen:
                seen.add((r1, r2))
                queue.append((r1, r2))
    return True


def subshift_equal(p1: KneadingPair, p2: KneadingPair) -> bool:
    """Whether Ω(p1) and Ω(p2) have the same language (hence are the same subshift)."""
    return _product_walk(p1, p2, "equal")


def subshift_contains(big: KneadingPair, small: KneadingPair) -> bool:
    """Whether Ω(small) ⊆ Ω(big)."""
    return _product_walk(small, big, "subset")


def extremal_extension(p: KneadingPair, word: str, side: Literal["min", "max"]) -> Optional[Seq]:
    """Smallest or largest element of Ω(p) beginning with ``word``, or ``None``."""
    if side not in ("min", "max"):
        raise DomainError(f"side must be 'min' or 'max', not {side!r}")
    aut = build_automaton(p)
    if aut.empty:
        return None
    q = START
    for a in word:
        q = aut.step(q, a)
        if q is None:
            return None
    order = "10" if side == "max" else "01"
    symbols = list(word)
    visited: dict = {}
    while q not in visited:
        visited[q] = len(symbols)
        for a in order:
            r = aut.step(q, a)
            if r is not None:
                symbols.append(a)
                q = r
                break
    i = visited[q]
    w = "".join(symbols)
    return canonicalize(w[:i], w[i:])


def extremal_element(p: KneadingPair, side: Literal["min", "max"]) -> Seq:
    """Lexicographically smallest or largest element of Ω, by a greedy walk."""
    out = extremal_extension(p, "", side)
    if out is None:
        raise DomainError(f"Ω{p} is empty")
    return out


def normalize_hole_pair(bhat: Seq, ahat: Seq) -> KneadingPair:
    """Weak-admissible ``(1s, 0t)`` with Ω(1s, 0t) = Ω(b̂, â).

    ``s`` and ``t`` are the smallest and largest elements of Ω(b̂, â).
    """
    if is_degenerate_hole(bhat, ahat):
        side = "upper (b̂|_2 = 11)" if bhat.prefix(2) == "11" else "lower (â|_2 = 00)"
        raise DomainError(f"degenerate hole: {side} collapses the survivor set")
    p = KneadingPair(bhat, ahat)
    if build_automaton(p).empty:
        raise DomainError(f"Ω{p} is empty")
    if set(words(p, 2)) <= {"00", "11"}:
        raise DomainError(f"Ω{p} is contained in {{0^∞, 1^∞}}")
    s = extremal_element(p, "min")
    t = extremal_element(p, "max")
    if s.first() != "0":
        raise DomainError(f"min Ω{p} = {s} starts with 1; lower side collapsed")
    if t.first() != "1":
        raise DomainError(f"max Ω{p} = {t} starts with 0; upper side collapsed")
    return KneadingPair(canonicalize("1" + s.pre, s.per), canonicalize("0" + t.pre, t.per))
