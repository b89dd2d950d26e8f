"""Exact combinatorics of level-restricted rigged partitions.

Enumerates the cutoff sets of rigged partition pairs, computes their
graded characters as exact Laurent polynomials, implements the
admissible-pair machinery with the rigging map between upper and lower
subsets, and verifies the recursion and decomposition identities
exhaustively at small levels.
"""

from .admissible import (
    AdmissibleData,
    IndexSet,
    delta_r,
    delta_s,
    epsilon,
    i_max,
    is_admissible,
    is_l1_admissible,
    j_min,
    kappa,
    kappa_interval,
    kappa_single,
    label_complement,
    primed_labels,
    rho,
    rho_prime,
    set_leq,
    sigma,
    sigma_prime,
    tilde_pair,
    untilde_pair,
)
from .bijection import (
    MarkedBound,
    Report,
    lower_member,
    map_m,
    upper_member,
    verify_bijection,
    verify_lower_decomposition,
    verify_recursion,
    verify_upper_decomposition,
)
from .characters import (
    LaurentPoly,
    char_R,
    char_recursion_check,
    degree_D,
    fermionic_char,
    gauss_binomial,
    gauss_binomial_product,
    rig_degree,
    sl2_char,
    substitute_monomial,
)
from .core import (
    KVector,
    Params,
    Partition,
    RiggedPair,
    Rigging,
    boundary_ok,
    tau,
    tau_min_form,
    vacancy_P,
    vacancy_Q,
    weight,
)
from .riggedsets import (
    INFINITY,
    RiggedSet,
    UncappedEnumerationError,
    enumerate_partitions,
    enumerate_R,
    enumerate_R_plain,
    enumerate_total,
    is_member,
    is_member_plain,
    last_rig,
    weight_bound,
)

__all__ = [
    "AdmissibleData",
    "IndexSet",
    "INFINITY",
    "KVector",
    "LaurentPoly",
    "MarkedBound",
    "Params",
    "Partition",
    "Report",
    "RiggedPair",
    "RiggedSet",
    "Rigging",
    "UncappedEnumerationError",
    "boundary_ok",
    "char_R",
    "char_recursion_check",
    "degree_D",
    "delta_r",
    "delta_s",
    "enumerate_partitions",
    "enumerate_R",
    "enumerate_R_plain",
    "enumerate_total",
    "epsilon",
    "fermionic_char",
    "gauss_binomial",
    "gauss_binomial_product",
    "i_max",
    "is_admissible",
    "is_l1_admissible",
    "is_member",
    "is_member_plain",
    "j_min",
    "kappa",
    "kappa_interval",
    "kappa_single",
    "label_complement",
    "last_rig",
    "lower_member",
    "map_m",
    "primed_labels",
    "rho",
    "rho_prime",
    "rig_degree",
    "set_leq",
    "sigma",
    "sigma_prime",
    "sl2_char",
    "substitute_monomial",
    "tau",
    "tau_min_form",
    "tilde_pair",
    "untilde_pair",
    "upper_member",
    "vacancy_P",
    "vacancy_Q",
    "verify_bijection",
    "verify_lower_decomposition",
    "verify_recursion",
    "verify_upper_decomposition",
    "weight",
    "weight_bound",
]
