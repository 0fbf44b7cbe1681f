"""Symbolic dynamics of expansive Lorenz maps with a hole at the critical point."""

from .admissibility import KneadingPair, is_degenerate_hole, is_hs_admissible, is_weak_admissible
from .bifurcation import (
    EBResult,
    PlateauReport,
    StaircaseRow,
    eb_equal_test,
    in_E,
    nonadmissible_periodic_approximant,
    periodic_approximant,
    plateau_I,
    plateau_P,
    staircase,
)
from .entropy import entropy_determinant, entropy_spectral, entropy_wordcount, kneading_determinant, omega_entropy
from .errors import DomainError, IndeterminateError, UndetectedPeriodError
from .interval import LinearModOneMap, kneading_invariants_numeric, params_from_pair
from .renorm import RenormWords, factorize_once, is_linearizable, is_prime, renorm_chain, star_product
from .seqcore import Seq, canonicalize, seq, shift
from .subshift import count_words, normalize_hole_pair, subshift_contains, subshift_equal

__all__ = [
    "KneadingPair",
    "is_degenerate_hole",
    "is_hs_admissible",
    "is_weak_admissible",
    "EBResult",
    "PlateauReport",
    "StaircaseRow",
    "eb_equal_test",
    "in_E",
    "nonadmissible_periodic_approximant",
    "periodic_approximant",
    "plateau_I",
    "plateau_P",
    "staircase",
    "entropy_determinant",
    "entropy_spectral",
    "entropy_wordcount",
    "kneading_determinant",
    "omega_entropy",
    "DomainError",
    "IndeterminateError",
    "UndetectedPeriodError",
    "LinearModOneMap",
    "kneading_invariants_numeric",
    "params_from_pair",
    "RenormWords",
    "factorize_once",
    "is_linearizable",
    "is_prime",
    "renorm_chain",
    "star_product",
    "Seq",
    "canonicalize",
    "seq",
    "shift",
    "count_words",
    "normalize_hole_pair",
    "subshift_contains",
    "subshift_equal",
]
