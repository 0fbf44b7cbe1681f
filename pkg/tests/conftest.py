import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lorenzhole.admissibility import KneadingPair, is_hs_admissible
from lorenzhole.seqcore import Seq, canonicalize

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")

words = st.text(alphabet="01", max_size=6)
nonempty_words = st.text(alphabet="01", min_size=1, max_size=6)


@st.composite
def seqs(draw, first=None, max_len=6):
    pre = draw(st.text(alphabet="01", max_size=max_len))
    per = draw(st.text(alphabet="01", min_size=1, max_size=max_len))
    if first is not None:
        if pre:
            pre = first + pre[1:]
        else:
            per = first + per[1:]
    return canonicalize(pre, per)


@st.composite
def pairs(draw, max_len=6):
    return KneadingPair(draw(seqs(first="1", max_len=max_len)), draw(seqs(first="0", max_len=max_len)))


def random_seq(rng: random.Random, first: str, max_len: int) -> Seq:
    while True:
        a = rng.randint(0, max_len - 1)
        b = rng.randint(1, max_len - a)
        w = first + "".join(rng.choice("01") for _ in range(a + b - 1))
        s = canonicalize(w[:a], w[a:])
        if s.first() == first:
            return s


def random_hs_pairs(seed: int, count: int, max_len: int = 6, total: int = 12):
    """Uniformly drawn H-S admissible pairs with description length at most ``total``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = KneadingPair(random_seq(rng, "1", max_len), random_seq(rng, "0", max_len))
        if len(p.upper) + len(p.lower) <= total and is_hs_admissible(p):
            out.append(p)
    return out


PISOT_POLYS = {
    # coefficients, highest degree first
    "plastic": [1, 0, -1, -1],
    "x3-x2-1": [1, -1, 0, -1],
    "golden": [1, -1, -1],
    "x3-2x2+x-1": [1, -2, 1, -1],
    "tribonacci": [1, -1, -1, -1],
}


def pisot_beta(name: str):
    """Largest real root of a Pisot polynomial at the current mpmath precision."""
    import mpmath

    roots = mpmath.polyroots(PISOT_POLYS[name], maxsteps=200, extraprec=mpmath.mp.prec)
    return max(mpmath.re(r) for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** -20)


def random_nonperiodic_E(seed: int, count: int, max_len: int = 6):
    """Pairs ``(â, b̂)`` with ``b̂`` eventually but not purely periodic and ``b̂ ∈ E(â)``."""
    from lorenzhole.admissibility import is_degenerate_hole
    from lorenzhole.bifurcation import in_E

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        b = random_seq(rng, "1", max_len)
        a = random_seq(rng, "0", max_len)
        if b.is_periodic or b.prefix(2) != "10" or b.per == "0" or is_degenerate_hole(b, a):
            continue
        if in_E(a, b) and (a, b) not in out:
            out.append((a, b))
    return out


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when != "call" or "test_acceptance" not in rep.nodeid:
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], status, props.get("title", ""), props.get("seconds")))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num, status, title, secs in sorted(lines):
        took = f" ({secs:.2f}s)" if secs is not None else ""
        terminalreporter.write_line(f"{'PASS' if status == 'passed' else 'FAIL'} {num:>2}. {title}{took}")
