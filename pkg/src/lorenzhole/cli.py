"""Command-line front end.

Exit status: 0 success, 2 bad arguments or sequence literals, 3 domain
errors, 4 indeterminate results.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import bifurcation as bif
from .admissibility import KneadingPair, is_hs_admissible, is_weak_admissible
from .entropy import entropy_determinant, entropy_spectral, entropy_wordcount, omega_entropy
from .errors import DomainError, IndeterminateError
from .interval import LinearModOneMap
from .renorm import renorm_chain
from .seqcore import Seq
from .subshift import normalize_hole_pair

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_INDETERMINATE = 0, 2, 3, 4


def _seq(text: str) -> Seq:
    try:
        return Seq.parse(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _pair(args, up="kplus", lo="kminus") -> KneadingPair:
    return KneadingPair(getattr(args, up), getattr(args, lo))


def _cmd_admissible(args) -> tuple[str, int]:
    p = _pair(args)
    return f"hs_admissible {str(is_hs_admissible(p)).lower()}\nweak_admissible {str(is_weak_admissible(p)).lower()}\n", EXIT_OK


def _cmd_normalize(args) -> tuple[str, int]:
    n = normalize_hole_pair(args.b, args.a)
    return f"upper {n.upper}\nlower {n.lower}\n", EXIT_OK


def _cmd_renorm(args) -> tuple[str, int]:
    chain = renorm_chain(_pair(args), args.depth)
    status = EXIT_INDETERMINATE if chain.terminal.value == "depth-exceeded" else EXIT_OK
    return chain.report(), status


def _cmd_entropy(args) -> tuple[str, int]:
    p = _pair(args)
    if args.method == "spectral":
        return f"entropy {entropy_spectral(p):.12g}\nmethod spectral\n", EXIT_OK
    if args.method == "wordcount":
        return f"entropy {entropy_wordcount(p, args.n):.12g}\nmethod wordcount n={args.n}\n", EXIT_OK
    res = entropy_determinant(p) if is_weak_admissible(p) else omega_entropy(p)
    return res.report(), EXIT_OK


def _cmd_plateau(args) -> tuple[str, int]:
    if args.which == "P":
        rep = bif.plateau_P(args.a, args.b, kplus=args.ambient_kplus)
    else:
        amb = None
        if args.ambient_kplus is not None and args.ambient_kminus is not None:
            amb = KneadingPair(args.ambient_kplus, args.ambient_kminus)
        rep = bif.plateau_I(args.a, args.b, amb)
    return rep.report(), EXIT_OK


def _cmd_ebtest(args) -> tuple[str, int]:
    res = bif.eb_equal_test(_pair(args), args.a, args.bound, args.depth)
    status = EXIT_INDETERMINATE if res.verdict is bif.Verdict.INDETERMINATE else EXIT_OK
    return res.report(), status


def _cmd_staircase(args) -> tuple[str, int]:
    m = None
    if args.beta is not None:
        m = LinearModOneMap(Fraction(args.beta), Fraction(args.alpha or "0"))
    rows = bif.staircase(_pair(args), args.a, args.grid, m, args.depth)
    return bif.staircase_csv(rows), EXIT_OK


def _cmd_approx(args) -> tuple[str, int]:
    if args.a is not None:
        out = bif.nonadmissible_periodic_approximant(args.b, args.a)
    else:
        out = bif.periodic_approximant(args.b, args.nmin)
    return f"approximant {out}\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lorenzhole", description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, help="also write the report or CSV to this file")
    sub = ap.add_subparsers(dest="verb", required=True)

    def with_pair(p, required=True):
        p.add_argument("--kplus", type=_seq, required=required, help="upper kneading sequence, e.g. (10)")
        p.add_argument("--kminus", type=_seq, required=required, help="lower kneading sequence, e.g. (011)")

    p = sub.add_parser("admissible", help="H-S and weak admissibility of a pair")
    with_pair(p)
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("normalize", help="weak-admissible pair with the same Ω as the hole codes")
    p.add_argument("--a", type=_seq, required=True)
    p.add_argument("--b", type=_seq, required=True)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("renorm", help="renormalization chain")
    with_pair(p)
    p.add_argument("--depth", type=int, default=64)
    p.set_defaults(func=_cmd_renorm)

    p = sub.add_parser("entropy", help="topological entropy of Ω(k+, k-)")
    with_pair(p)
    p.add_argument("--method", choices=["determinant", "spectral", "wordcount"], default="determinant")
    p.add_argument("--n", type=int, default=24, help="word length for the wordcount bound")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("plateau", help="entropy plateau P(b) or survivor-set plateau I(b)")
    p.add_argument("--a", type=_seq, required=True)
    p.add_argument("--b", type=_seq, required=True)
    p.add_argument("--which", choices=["P", "I"], default="P")
    p.add_argument("--ambient-kplus", type=_seq, help="upper kneading invariant of the ambient map")
    p.add_argument("--ambient-kminus", type=_seq, help="lower kneading invariant of the ambient map")
    p.set_defaults(func=_cmd_plateau)

    p = sub.add_parser("ebtest", help="bounded test of E(a) = B(a)")
    with_pair(p)
    p.add_argument("--a", type=_seq, help="code of a; omit for a = c")
    p.add_argument("--bound", type=int, default=12, help="largest period enumerated")
    p.add_argument("--depth", type=int, default=64)
    p.set_defaults(func=_cmd_ebtest)

    p = sub.add_parser("staircase", help="entropy as b sweeps [c, 1], as CSV")
    with_pair(p)
    p.add_argument("--a", type=_seq, required=True)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--beta", help="map slope as a fraction, e.g. 2; enables exact b values")
    p.add_argument("--alpha", help="map offset as a fraction")
    p.add_argument("--depth", type=int, default=12, help="largest period without a map")
    p.set_defaults(func=_cmd_staircase)

    p = sub.add_parser("approx", help="periodic approximant of a non-periodic b̂")
    p.add_argument("--b", type=_seq, required=True)
    p.add_argument("--nmin", type=int, default=8)
    p.add_argument("--a", type=_seq, help="build a non-admissible approximant against this â")
    p.set_defaults(func=_cmd_approx)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, status = args.func(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except IndeterminateError as e:
        print(f"indeterminate: {e}", file=sys.stderr)
        return EXIT_INDETERMINATE
    sys.stdout.write(text)
    if args.out is not None:
        args.out.write_text(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
