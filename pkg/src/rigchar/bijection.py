"""Lower and upper subsets, the rigging map between them, and the
exhaustive verifiers for the recursion and both decomposition statements.

The verifiers return structured Report values carrying the first
counterexample with full provenance; they never assume the statements
they are checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import (
    IndexSet,
    all_index_sets,
    delta_r,
    delta_s,
    epsilon,
    is_admissible,
    is_l1_admissible,
    primed_labels,
    rho,
    rho_prime,
    sigma,
    sigma_prime,
)
from .core import Params, Partition, RiggedPair, Rigging, vacancy_P, vacancy_Q
from .riggedsets import RiggedSet, canonical_key, enumerate_R, last_rig


@dataclass(frozen=True)
class Report:
    """Outcome of one verification, with provenance for failures.

    context identifies the grid point; detail carries either the summary
    of a passing check or the first counterexample (offending element,
    covering pairs, per-term cardinalities) of a failing one.
    """

    ok: bool
    check: str
    context: dict
    detail: dict


@dataclass(frozen=True)
class MarkedBound:
    """A bound vector whose components are equalities where marked."""

    value: tuple[int, ...]
    marked: tuple[bool, ...]

    def satisfied_by(self, rig: Rigging) -> bool:
        for alpha, (bound, eq) in enumerate(zip(self.value, self.marked), start=1):
            v = last_rig(rig, alpha)
            if eq:
                if v != bound:
                    return False
            elif not v >= bound:
                return False
        return True


def lower_bounds(I: IndexSet, J: IndexSet, p: Params) -> tuple[MarkedBound, MarkedBound] | None:
    """Marked lower bounds (for r and s) of the lower subset, or None if
    the pair is not (l1, l2)-admissible."""
    if not is_admissible(I, J, p.l1, p.l2):
        return None
    rv = rho(I, J, p.l1)
    sv = sigma(J, p.l2)
    return (
        MarkedBound(rv.entries, tuple(e == 1 for e in epsilon(I).entries)),
        MarkedBound(sv.entries, tuple(e == 1 for e in epsilon(J).entries)),
    )


def upper_bounds(I: IndexSet, J: IndexSet, l1: int) -> tuple[MarkedBound, MarkedBound] | None:
    """Marked lower bounds of the upper subset, or None if not l1-admissible."""
    if not is_l1_admissible(I, J, l1):
        return None
    rv = rho_prime(I, J, l1)
    sv = sigma_prime(I, J, l1)
    return (
        MarkedBound(rv.entries, tuple(e == -1 for e in epsilon(I).entries)),
        MarkedBound(sv.entries, tuple(e == -1 for e in epsilon(J).entries)),
    )


def _cutoff_member(x: RiggedPair, M: int, N: int, l1: int, l2: int) -> bool:
    P = vacancy_P(x.mu, x.nu, M, l1)
    if not P.is_nonneg():
        return False
    Q = vacancy_Q(x.mu, x.nu, N, l2)
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


def lower_member(x: RiggedPair, I: IndexSet, J: IndexSet, p: Params) -> bool:
    """Membership of x in the lower subset attached to (I, J) at (M, N)."""
    bounds = lower_bounds(I, J, p)
    if bounds is None:
        return False
    br, bs = bounds
    if not (br.satisfied_by(x.r) and bs.satisfied_by(x.s)):
        return False
    return _cutoff_member(x, p.M, p.N, p.l1, p.l2)


def upper_member(x: RiggedPair, I: IndexSet, J: IndexSet, l1: int, p: Params) -> bool:
    """Membership of x in the upper subset attached to (I, J) at (M, N-1).

    Only k, M and N are read from p; the labels come from l1 and the
    primed labels derived from (l1, |I|, |J|-|I|).
    """
    if p.N < 1:
        raise ValueError("upper subsets live one N-step down; need N >= 1")
    bounds = upper_bounds(I, J, l1)
    if bounds is None:
        return False
    br, bs = bounds
    if not (br.satisfied_by(x.r) and bs.satisfied_by(x.s)):
        return False
    l1p, l2p, _ = primed_labels(p.k, l1, len(I), len(J) - len(I))
    return _cutoff_member(x, p.M, p.N - 1, l1p, l2p)


def map_m(x: RiggedPair, I: IndexSet, J: IndexSet, p: Params) -> RiggedPair:
    """The rigging map from the upper subset onto the lower subset.

    Multiplicities shift by epsilon; surviving riggings shift by
    delta_r/delta_s; a marked removal drops the bottom row and a new
    bottom row rigged by rho (resp. sigma) is appended where epsilon is
    +1.  The image is validated against lower_member and a mismatch is a
    hard error: the verifiers must not trust the formulas they test.
    """
    if len(J) > p.l2:
        raise ValueError("|J| exceeds l2: the target lower subset is empty")
    if not upper_member(x, I, J, p.l1, p):
        raise ValueError("input is not a member of the upper subset")
    k = p.k
    eI = epsilon(I)
    eJ = epsilon(J)
    dr = delta_r(I, J, p.l1, p.l2)
    ds = delta_s(I, J, p.l1, p.l2)
    rv = rho(I, J, p.l1)
    sv = sigma(J, p.l2)

    def shift(part: Partition, rig: Rigging, eps, delta, new_bottom):
        mult = []
        rows = []
        for alpha in range(1, k + 1):
            old = list(rig.row(alpha))
            d = delta[alpha]
            if eps[alpha] == -1:
                new = [v + d for v in old[:-1]]
            else:
                new = [v + d for v in old]
                if eps[alpha] == 1:
                    new.append(new_bottom[alpha])
            mult.append(part.m(alpha) + eps[alpha])
            rows.append(tuple(new))
        return Partition(k, tuple(mult)), Rigging(tuple(rows))

    mu, r = shift(x.mu, x.r, eI, dr, rv)
    nu, s = shift(x.nu, x.s, eJ, ds, sv)
    out = RiggedPair(mu, r, nu, s)
    if not lower_member(out, I, J, p):
        raise AssertionError(
            f"rigging map produced a non-member of the lower subset: {out}"
        )
    return out


def _pair_obj(x: RiggedPair) -> dict:
    return {
        "mu": list(x.mu.mult),
        "r": [list(row) for row in x.r.rows],
        "nu": list(x.nu.mult),
        "s": [list(row) for row in x.s.rows],
    }


def _params_obj(p: Params) -> dict:
    return {"k": p.k, "l1": p.l1, "l2": p.l2, "l3": p.l3, "M": p.M, "N": p.N}


def _ambient(p: Params, m: int, n: int) -> RiggedSet:
    """The cutoff set with the tau condition switched off (l3 = min)."""
    free = Params(p.k, p.l1, p.l2, min(p.l1, p.l2), p.M, p.N)
    return enumerate_R(free, m, n)


def verify_recursion(p: Params, m: int, n: int) -> Report:
    """Compare the cardinality of one graded piece against the recursion sum."""
    if p.N < 1:
        raise ValueError("the recursion steps N down; need N >= 1")
    lhs = len(enumerate_R(p, m, n))
    terms = []
    rhs = 0
    for a in range(p.l3 + 1):
        for c in range(p.l2 - a + 1):
            l1p, l2p, l3p = primed_labels(p.k, p.l1, a, c)
            pp = Params(p.k, l1p, l2p, l3p, p.M, p.N - 1)
            count = len(enumerate_R(pp, m - a, n - a - c))
            terms.append({"a": a, "c": c, "count": count})
            rhs += count
    context = {"params": _params_obj(p), "m": m, "n": n}
    return Report(
        ok=(lhs == rhs),
        check="recursion",
        context=context,
        detail={"lhs": lhs, "rhs": rhs, "terms": terms},
    )


def verify_lower_decomposition(p: Params, m: int, n: int) -> Report:
    """Exact-cover check of the graded piece by the lower subsets.

    Every element of the ambient cutoff set is scanned: elements of the
    tau-restricted set must be covered by exactly one admissible (I, J)
    with |I| <= l3 and |J| <= l2, all others by none.  While scanning,
    nonempty subsets are also checked against the vacancy bounds
    rho <= P and sigma <= Q (valid for N >= 1).
    """
    context = {"params": _params_obj(p), "m": m, "n": n}
    if m < 0 or n < 0:
        return Report(True, "lower-decomposition", context, {"elements": 0, "pairs": 0})
    target = set(enumerate_R(p, m, n).elements)
    ambient = _ambient(p, m, n)
    pairs = []
    for I in all_index_sets(p.k):
        if len(I) > p.l3:
            continue
        for J in all_index_sets(p.k):
            if len(J) > p.l2:
                continue
            bounds = lower_bounds(I, J, p)
            if bounds is not None:
                pairs.append((I, J, bounds))
    for x in ambient:
        covers = []
        for I, J, (br, bs) in pairs:
            if br.satisfied_by(x.r) and bs.satisfied_by(x.s):
                covers.append((I, J))
                if p.N >= 1:
                    P = vacancy_P(x.mu, x.nu, p.M, p.l1)
                    Q = vacancy_Q(x.mu, x.nu, p.N, p.l2)
                    if not (rho(I, J, p.l1) <= P and sigma(J, p.l2) <= Q):
                        return Report(
                            False,
                            "lower-decomposition",
                            context,
                            {
                                "reason": "nonempty lower subset violates rho<=P, sigma<=Q",
                                "element": _pair_obj(x),
                                "pair": {"I": list(I), "J": list(J)},
                            },
                        )
        expected = 1 if x in target else 0
        if len(covers) != expected:
            return Report(
                False,
                "lower-decomposition",
                context,
                {
                    "element": _pair_obj(x),
                    "expected_covers": expected,
                    "covers": [{"I": list(I), "J": list(J)} for I, J in covers],
                },
            )
    return Report(
        True,
        "lower-decomposition",
        context,
        {"elements": len(ambient), "pairs": len(pairs)},
    )


def verify_upper_decomposition(
    l1: int, a: int, c: int, p: Params, m: int, n: int
) -> Report:
    """Exact-cover check of the primed graded piece by the upper subsets.

    The target lives at (M, N-1) with the labels primed from (l1, a, c);
    the cover runs over all (I, J) with |I| = a and |J| = a + c.  Only k,
    M and N are read from p.  Nonempty subsets are also checked against
    rho' <= P and sigma' <= Q.
    """
    k = p.k
    b = a + c
    if not (0 <= a <= l1 <= k and a <= b <= k):
        raise ValueError(f"need 0 <= a <= l1 <= k and a+c <= k; got l1={l1}, a={a}, c={c}")
    if p.N < 1:
        raise ValueError("upper subsets live one N-step down; need N >= 1")
    l1p, l2p, l3p = primed_labels(k, l1, a, c)
    pp = Params(k, l1p, l2p, l3p, p.M, p.N - 1)
    context = {
        "params": _params_obj(p),
        "l1": l1,
        "a": a,
        "c": c,
        "primed": [l1p, l2p, l3p],
        "m": m,
        "n": n,
    }
    if m < 0 or n < 0:
        return Report(True, "upper-decomposition", context, {"elements": 0, "pairs": 0})
    target = set(enumerate_R(pp, m, n).elements)
    ambient = _ambient(pp, m, n)
    pairs = []
    for I in all_index_sets(k):
        if len(I) != a:
            continue
        for J in all_index_sets(k):
            if len(J) != b:
                continue
            bounds = upper_bounds(I, J, l1)
            if bounds is not None:
                pairs.append((I, J, bounds))
    for x in ambient:
        covers = []
        for I, J, (br, bs) in pairs:
            if br.satisfied_by(x.r) and bs.satisfied_by(x.s):
                covers.append((I, J))
                P = vacancy_P(x.mu, x.nu, p.M, l1p)
                Q = vacancy_Q(x.mu, x.nu, p.N - 1, l2p)
                if not (rho_prime(I, J, l1) <= P and sigma_prime(I, J, l1) <= Q):
                    return Report(
                        False,
                        "upper-decomposition",
                        context,
                        {
                            "reason": "nonempty upper subset violates rho'<=P, sigma'<=Q",
                            "element": _pair_obj(x),
                            "pair": {"I": list(I), "J": list(J)},
                        },
                    )
        expected = 1 if x in target else 0
        if len(covers) != expected:
            return Report(
                False,
                "upper-decomposition",
                context,
                {
                    "element": _pair_obj(x),
                    "expected_covers": expected,
                    "covers": [{"I": list(I), "J": list(J)} for I, J in covers],
                },
            )
    return Report(
        True,
        "upper-decomposition",
        context,
        {"elements": len(ambient), "pairs": len(pairs)},
    )


def verify_bijection(p: Params, m: int, n: int) -> Report:
    """Check, for every (l1, l2)-admissible (I, J), that the rigging map is
    injective on the upper subset at (m-a, n-b) with image exactly the
    lower subset at (m, n)."""
    if p.N < 1:
        raise ValueError("the rigging map steps N down; need N >= 1")
    k = p.k
    context = {"params": _params_obj(p), "m": m, "n": n}
    lower_ambient = _ambient(p, m, n)
    for I in all_index_sets(k):
        for J in all_index_sets(k):
            if len(J) > p.l2 or not is_admissible(I, J, p.l1, p.l2):
                continue
            a, b = len(I), len(J)
            l1p, l2p, _ = primed_labels(k, p.l1, a, b - a)
            upper_ambient = enumerate_R(
                Params(k, l1p, l2p, min(l1p, l2p), p.M, p.N - 1), m - a, n - b
            )
            ups = [x for x in upper_ambient if upper_member(x, I, J, p.l1, p)]
            try:
                images = [map_m(x, I, J, p) for x in ups]
            except (ValueError, AssertionError) as exc:
                return Report(
                    False,
                    "bijection",
                    context,
                    {"pair": {"I": list(I), "J": list(J)}, "reason": str(exc)},
                )
            if len(set(images)) != len(images):
                return Report(
                    False,
                    "bijection",
                    context,
                    {"pair": {"I": list(I), "J": list(J)}, "reason": "not injective"},
                )
            lows = [y for y in lower_ambient if lower_member(y, I, J, p)]
            if sorted(images, key=canonical_key) != lows:
                return Report(
                    False,
                    "bijection",
                    context,
                    {
                        "pair": {"I": list(I), "J": list(J)},
                        "reason": "image differs from lower subset",
                        "image_size": len(images),
                        "lower_size": len(lows),
                    },
                )
    return Report(True, "bijection", context, {})
