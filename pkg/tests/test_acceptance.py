"""The twelve acceptance criteria, each at its stated tolerance and time budget."""

import math
import time
from contextlib import contextmanager

import mpmath
import pytest

from lorenzhole.admissibility import KneadingPair
from lorenzhole.bifurcation import (
    Verdict, eb_equal_test, in_E, periodic_approximant, plateau_I, plateau_P, staircase, staircase_csv,
)
from lorenzhole.entropy import entropy_determinant, entropy_spectral, entropy_wordcount
from lorenzhole.interval import LinearModOneMap, kneading_invariants_numeric, params_from_pair
from lorenzhole.renorm import RenormWords, StepKind, factorize_once, renorm_chain, star_product
from lorenzhole.seqcore import Seq, is_self_admissible, metric_distance
from lorenzhole.subshift import normalize_hole_pair, subshift_equal

from conftest import PISOT_POLYS, pisot_beta, random_hs_pairs, random_nonperiodic_E

S = Seq.parse
P = KneadingPair.parse


@pytest.fixture
def criterion(record_property):
    """``with criterion(n, title, budget):`` times the body and tags the report."""

    @contextmanager
    def run(num: int, title: str, budget: float):
        record_property("criterion", num)
        record_property("title", title)
        start = time.perf_counter()
        yield
        elapsed = time.perf_counter() - start
        record_property("seconds", elapsed)
        assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"

    return run


def test_01_renormalization_fixtures(criterion):
    with criterion(1, "renormalization fixtures", 1):
        w, r = factorize_once(P("(100101)", "(0110)"))
        assert w == RenormWords("10", "01") and r == P("(100)", "(01)")
        w, _ = factorize_once(P("(100011)", "(011100)"))
        assert w == RenormWords("100", "011")
        assert renorm_chain(P("(100101)", "(0110)")).steps[0].kind is StepKind.PERIODIC
        assert renorm_chain(P("(100011)", "(011100)")).steps[0].kind is StepKind.NONPERIODIC


def test_02_entropy_headline(criterion):
    with criterion(2, "entropy of ((10),(011)) is log 1.3247", 1):
        res = entropy_determinant(P("(10)", "(011)"))
        assert abs(math.exp(res.value) - 1.3247) <= 5e-4
        # exact sign change of 1 - t^2 - t^3 across the bracket
        f = lambda t: 1 - t ** 2 - t ** 3  # noqa: E731
        assert f(res.bracket.lo) >= 0 >= f(res.bracket.hi)


def test_03_same_entropy_family(criterion):
    with criterion(3, "same-entropy family", 1):
        hs = [entropy_determinant(P(u, "(01110)")).value for u in ("(10011)", "(10011011)", "10(011)")]
        assert max(hs) - min(hs) <= 1e-9


def test_04_normalization_fixtures(criterion):
    with criterion(4, "normalization fixtures", 1):
        for b, a, lower in [("(10011)", "(0111010100)", "(0111010)"),
                            ("(100)", "(011000)", "(01)"),
                            ("(100)", "(01100)", "(01)")]:
            n = normalize_hole_pair(S(b), S(a))
            assert n.lower == S(lower)
            assert subshift_equal(n, KneadingPair(S(b), S(a)))


def test_05_plateau_fixtures(criterion):
    ambient = P("(10000)", "(011)")
    cases = [
        ("(0111010100)", "(10011)", P("1(0)", "0(1)"), ("10(011)", "(10)"), ("10011(0111010)", "(10011)")),
        ("(011000)", "(100)", ambient, ("100(01)", "(100)"), ("100(01)", "(100)")),
        ("(01100)", "(100)", ambient, ("100(01)", "(100)"), ("100(0110)", "(100)")),
    ]
    with criterion(5, "plateau fixtures P(b) and I(b)", 5):
        mismatches = []
        for label, (a, b, amb, p_ends, i_ends) in zip(("i", "ii", "iii"), cases):
            Pb = plateau_P(S(a), S(b))
            Ib = plateau_I(S(a), S(b), amb)
            if (Pb.left_code, Pb.right_code) != tuple(map(S, p_ends)):
                mismatches.append(f"({label}) P(b) = [{Pb.left_code}, {Pb.right_code}], expected {p_ends}")
            if (Ib.left_code, Ib.right_code) != tuple(map(S, i_ends)) or Ib.closed_flags != (False, True):
                mismatches.append(f"({label}) I(b) = {Ib.report().splitlines()[3][9:]}, "
                                  f"expected ({i_ends[0]}, {i_ends[1]}]")
            assert Pb.left_code <= Ib.left_code and Ib.right_code <= Pb.right_code
            assert (Pb.left_code, Pb.right_code, Pb.closed_flags) != (Ib.left_code, Ib.right_code, Ib.closed_flags)
        assert not mismatches, "; ".join(mismatches)


def test_06_oracle_equivalence(criterion):
    with criterion(6, "determinant vs spectral vs word-count oracles", 60):
        sample = [p for p in random_hs_pairs(seed=6, count=40) if entropy_determinant(p).value > 0]
        assert len(sample) >= 20
        bad = []
        for p in sample:
            h = entropy_determinant(p).value
            if abs(h - entropy_spectral(p)) > 1e-6:
                bad.append(f"{p} spectral")
            excess = entropy_wordcount(p, 24) - h
            if not -0.001 <= excess <= 0.05:
                bad.append(f"{p} wordcount excess {excess:.4f}")
        assert not bad, "; ".join(bad)


def test_07_periodic_scaling(criterion):
    with criterion(7, "periodic scaling law", 10):
        half = RenormWords("10", "01")
        ks = [k for k in random_hs_pairs(seed=7, count=20) if entropy_determinant(k).value > 0]
        assert len(ks) >= 10
        for k in ks:
            h = entropy_determinant(k).value
            assert abs(entropy_determinant(star_product(half, k)).value - h / 2) <= 1e-9


def test_08_doubling_baseline(criterion):
    with criterion(8, "doubling-map baseline", 1):
        res = entropy_determinant(P("1(0)", "0(1)"))
        assert res.value == pytest.approx(math.log(2), abs=1e-12)
        assert 0.5 in res.bracket and res.bracket.width <= 1e-12


def test_09_parameter_roundtrip(criterion):
    with criterion(9, "(beta, alpha) roundtrip on a 5x5 grid", 30):
        worst = 0.0
        with mpmath.workdps(60):
            for name in sorted(PISOT_POLYS):
                beta = pisot_beta(name)
                for j in range(1, 6):
                    alpha = j * (2 - beta) / 6
                    p = kneading_invariants_numeric(LinearModOneMap(beta, alpha))
                    b, a = params_from_pair(p)
                    worst = max(worst, abs(b - float(beta)), abs(a - float(alpha)))
        assert worst <= 1e-6


def test_10_eb_fixtures(criterion):
    with criterion(10, "E=B fixtures", 30):
        res = eb_equal_test(P("1(0)", "(01101)"), period_bound=12)
        assert res.verdict is Verdict.EQUAL
        res = eb_equal_test(P("1(0)", "0111000(100)"), period_bound=12)
        assert res.verdict is Verdict.NOT_EQUAL and res.witness == S("(10)")
        res = eb_equal_test(P("1(0)", "(01101)"), a_code=S("(011)"))
        assert res.verdict is Verdict.NOT_EQUAL


def test_11_approximant_density(criterion):
    with criterion(11, "periodic approximant density", 10):
        for a, b in random_nonperiodic_E(seed=11, count=20):
            for k in (6, 10, 14):
                ap = periodic_approximant(b, k)
                assert ap.is_periodic and is_self_admissible(ap, "upper")
                assert metric_distance(b, ap) <= 2.0 ** -k
                assert in_E(a, ap)


def test_12_staircase_sanity(criterion):
    with criterion(12, "doubling-map staircase", 60):
        args = (P("1(0)", "0(1)"), S("0(1)"), 512, LinearModOneMap(2, 0))
        rows = staircase(*args)
        assert len(rows) == 512
        hs = [r.entropy for r in rows]
        assert all(x >= y for x, y in zip(hs, hs[1:]))
        assert hs[0] == pytest.approx(math.log(2), abs=1e-12) and hs[-1] == 0
        # zero-entropy and degenerate rows form one block at the right end
        first_zero = hs.index(0.0)
        assert all(h == 0 for h in hs[first_zero:])
        flagged = [i for i, r in enumerate(rows) if r.degenerate]
        assert flagged == list(range(flagged[0], 512))
        assert staircase_csv(rows).encode() == staircase_csv(staircase(*args)).encode()
