"""Brute-force, provably complete enumeration of the rigged-partition sets.

This module is the oracle every identity verifier is checked against: it
materialises the graded pieces of the cutoff sets by direct scan over all
partitions and all riggings below the vacancy bounds.

Completeness of enumerate_total rests on the weight bound derived from the
non-negativity of the k-th vacancy components: a nonempty piece forces
n >= 2m - kM + (k-l1)+ and m >= 2n - kN + (k-l2)+, hence
3m <= 2kM + kN and 3n <= kM + 2kN.  The scan ranges below use exactly
those bounds, so no nonempty piece can be missed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .core import (
    Params,
    Partition,
    RiggedPair,
    Rigging,
    tau,
    vacancy_P,
    vacancy_Q,
    weight,
)


class UncappedEnumerationError(ValueError):
    """Raised when asked to materialise an infinite rigged set without a cap."""


class _Infinity:
    """Sentinel for the bottom rigging of an absent row.

    Compares strictly greater than every integer and is never equal to
    one, so marked (equality) conditions can never be met by it while
    unmarked (>=) conditions hold vacuously.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("rigchar.INFINITY")

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __add__(self, other):
        return self

    def __radd__(self, other):
        return self


INFINITY = _Infinity()


def last_rig(rig: Rigging, alpha: int):
    """Bottom rigging of the rows of length alpha, or INFINITY if none."""
    row = rig.row(alpha)
    return row[-1] if row else INFINITY


def canonical_key(x: RiggedPair):
    """Sort key: lexicographic on (mu, nu) row lists, then flattened riggings."""
    return (x.mu.rows(), x.nu.rows(), x.r.flat(), x.s.flat())


@dataclass(frozen=True)
class RiggedSet:
    """A graded piece, as a duplicate-free canonically ordered element list.

    params is None for sets enumerated without degree cutoffs (the capped
    plain sets), otherwise the full parameter tuple the set belongs to.
    """

    params: Params | None
    m: int
    n: int
    elements: tuple[RiggedPair, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: RiggedPair) -> bool:
        return x in self.elements


@lru_cache(maxsize=None)
def enumerate_partitions(m: int, k: int) -> tuple[Partition, ...]:
    """All level-k restricted partitions of m, ordered lexicographically by rows."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        return ()
    found: list[Partition] = []

    def descend(remaining: int, largest: int, acc: list[int]) -> None:
        if remaining == 0:
            found.append(Partition.from_rows(k, acc))
            return
        for part in range(min(largest, remaining), 0, -1):
            acc.append(part)
            descend(remaining - part, part, acc)
            acc.pop()

    descend(m, k, [])
    found.sort(key=lambda p: p.rows())
    return tuple(found)


@lru_cache(maxsize=None)
def _row_choices(count: int, bound) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing tuples of the given length with entries in [0, bound]."""
    if count == 0:
        return ((),)
    if bound < 0:
        return ()
    return tuple(
        tuple(reversed(comb))
        for comb in combinations_with_replacement(range(bound + 1), count)
    )


def satisfies_tau(x: RiggedPair, p: Params) -> bool:
    """Condition on the bottom riggings: r[a] + s[b] >= tau(a, b) for all a, b.

    Pairs where either row set is empty are vacuous by the INFINITY
    convention.
    """
    k = x.k
    for alpha in range(1, k + 1):
        ra = last_rig(x.r, alpha)
        if ra is INFINITY:
            continue
        for beta in range(1, k + 1):
            sb = last_rig(x.s, beta)
            if sb is INFINITY:
                continue
            if ra + sb < tau(alpha, beta, p):
                return False
    return True


def satisfies_cutoffs(x: RiggedPair, p: Params) -> bool:
    """Vacancy non-negativity plus the upper bounds on the top riggings."""
    P = vacancy_P(x.mu, x.nu, p.M, p.l1)
    if not P.is_nonneg():
        return False
    Q = vacancy_Q(x.mu, x.nu, p.N, p.l2)
    if not Q.is_nonneg():
        return False
    for alpha in range(1, x.k + 1):
        row = x.r.row(alpha)
        if row and row[0] > P[alpha]:
            return False
        row = x.s.row(alpha)
        if row and row[0] > Q[alpha]:
            return False
    return True


def is_member(x: RiggedPair, p: Params) -> bool:
    """Membership of x in the cutoff set at its own weights."""
    return satisfies_cutoffs(x, p) and satisfies_tau(x, p)


def is_member_plain(x: RiggedPair, l1: int, l2: int, l3: int) -> bool:
    """Membership in the uncapped set with the tau condition only."""
    p = Params(x.k, l1, l2, l3, 0, 0)
    return satisfies_tau(x, p)


_R_CACHE: dict[tuple[Params, int, int], RiggedSet] = {}


def clear_cache() -> None:
    _R_CACHE.clear()


def enumerate_R(p: Params, m: int, n: int) -> RiggedSet:
    """The graded piece at weights (m, n) of the full cutoff set.

    An element is kept iff (a) both vacancy vectors are componentwise
    non-negative, (b) every top rigging is bounded by the matching vacancy
    entry, and (c) the bottom riggings meet the tau lower bounds.  Negative
    weights give the empty set.
    """
    key = (p, m, n)
    hit = _R_CACHE.get(key)
    if hit is not None:
        return hit
    if m < 0 or n < 0:
        rs = RiggedSet(p, m, n, ())
        _R_CACHE[key] = rs
        return rs

    k = p.k
    taumat = [[tau(a, b, p) for b in range(1, k + 1)] for a in range(1, k + 1)]
    tau_active = any(v > 0 for row in taumat for v in row)
    out: list[RiggedPair] = []

    for mu in enumerate_partitions(m, k):
        for nu in enumerate_partitions(n, k):
            P = vacancy_P(mu, nu, p.M, p.l1)
            if not P.is_nonneg():
                continue
            Q = vacancy_Q(mu, nu, p.N, p.l2)
            if not Q.is_nonneg():
                continue
            r_opts = [_row_choices(mu.mult[i], P.entries[i]) for i in range(k)]
            s_opts = [_row_choices(nu.mult[i], Q.entries[i]) for i in range(k)]
            mu_rows = [i for i in range(k) if mu.mult[i] > 0]
            nu_rows = [i for i in range(k) if nu.mult[i] > 0]
            check = tau_active and mu_rows and nu_rows
            for rr in product(*r_opts):
                if check:
                    need = [
                        max(taumat[i][j] - rr[i][-1] for i in mu_rows)
                        for j in nu_rows
                    ]
                r_obj = Rigging(rr)
                for ss in product(*s_opts):
                    if check and any(
                        ss[j][-1] < need[pos] for pos, j in enumerate(nu_rows)
                    ):
                        continue
                    out.append(RiggedPair(mu, r_obj, nu, Rigging(ss)))

    out.sort(key=canonical_key)
    rs = RiggedSet(p, m, n, tuple(out))
    _R_CACHE[key] = rs
    return rs


def enumerate_R_plain(
    k: int, l1: int, l2: int, l3: int, m: int, n: int, cap: int | None = None
) -> RiggedSet:
    """The tau-restricted set with no vacancy conditions, riggings capped.

    The uncapped set is infinite, so materialising it without a cap is
    refused with UncappedEnumerationError.  Membership testing of single
    elements is available through is_member_plain regardless.
    """
    if cap is None:
        raise UncappedEnumerationError(
            "the tau-restricted set is infinite; pass a cap on rigging entries"
        )
    p = Params(k, l1, l2, l3, 0, 0)
    if m < 0 or n < 0:
        return RiggedSet(None, m, n, ())
    out: list[RiggedPair] = []
    for mu in enumerate_partitions(m, k):
        for nu in enumerate_partitions(n, k):
            r_opts = [_row_choices(mu.mult[i], cap) for i in range(k)]
            s_opts = [_row_choices(nu.mult[i], cap) for i in range(k)]
            for rr in product(*r_opts):
                r_obj = Rigging(rr)
                for ss in product(*s_opts):
                    x = RiggedPair(mu, r_obj, nu, Rigging(ss))
                    if satisfies_tau(x, p):
                        out.append(x)
    out.sort(key=canonical_key)
    return RiggedSet(None, m, n, tuple(out))


def weight_bound(p: Params) -> tuple[int, int]:
    """Largest (m, n) a nonempty graded piece can have (see module docstring)."""
    return (
        (2 * p.k * p.M + p.k * p.N) // 3,
        (p.k * p.M + 2 * p.k * p.N) // 3,
    )


def enumerate_total(p: Params) -> dict[tuple[int, int], RiggedSet]:
    """Every nonempty graded piece, keyed by (m, n) in ascending order."""
    mmax, nmax = weight_bound(p)
    pieces: dict[tuple[int, int], RiggedSet] = {}
    for m in range(mmax + 1):
        for n in range(nmax + 1):
            rs = enumerate_R(p, m, n)
            if rs.elements:
                pieces[(m, n)] = rs
    return pieces
