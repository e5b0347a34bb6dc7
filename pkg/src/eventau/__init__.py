"""Tau-function tables and the even-value exclusion machinery built on them.

The package computes coefficients of the discriminant cusp form at scale
(`compute_tau_table`), exposes the Lucas-sequence view of prime-power
coefficient runs (`lucas`), regenerates the congruence progression tables
(`congruence`), scans the defective-case curves (`curves`), and decides with
a citable proof trace whether a value +-2*l^j is excluded as a coefficient
(`exclusion.decide`).  `verify` contains the empirical scans that hold the
whole construction to its invariants.
"""

from .arith import (
    DEFAULT_FACTORIZER,
    FactorizationBudgetExceeded,
    Factorizer,
    is_probable_prime,
    primes_up_to,
    sigma,
)
from .congruence import (
    RESIDUE_PROFILES,
    S_MINUS,
    S_PLUS,
    SCOPE_PRIMES,
    ExceptionalPrimeError,
    PrimeNotCoveredError,
    ProgressionTriple,
    SurvivorSet,
    excluded_by_congruence,
    in_N,
    regenerate_survivors,
    representable_as_a2_23b2,
    survivor_set_from_triples,
    tau_p_residue,
)
from .curves import CurveForm, CurveSpec, scan_prime_points
from .exclusion import (
    KNOWN_FACTS,
    KnownFact,
    Outcome,
    Target,
    TraceStep,
    Verdict,
    decide,
    omega_lower_bound,
)
from .lucas import (
    DefectiveMatch,
    LucasParams,
    apparition_bound_holds,
    check_apparition_bound,
    defective_case_classifier,
    is_defective,
    lucas_u,
    rank_of_apparition,
)
from .tau import (
    TableFormatError,
    TableRangeError,
    TauTable,
    compute_tau_table,
    load_tau_table,
    save_tau_table,
    tau_from_factorization,
    tau_prime_power,
)
from .verify import (
    ScanReport,
    scan_for_value,
    scan_two_times_prime,
    verify_deligne,
    verify_hecke,
    verify_multiplicativity,
    verify_omega_inequality,
    verify_parity,
)

__version__ = "0.1.0"
