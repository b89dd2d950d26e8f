"""Index-set machinery for admissible pairs.

Staircase vectors kappa/epsilon, the labelling of the complement of J
above l1, (l1,l2)-admissibility, the pair bijection between (I, J) and
(tilde I, tilde J), minimal second components, and the bound vectors
rho, sigma, rho', sigma', delta_r and delta_s.

Every function recomputes from scratch: the sets involved have at most
2^k elements and purity keeps the exhaustive tests trivial to trust.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import KVector, pos_part


@dataclass(frozen=True)
class IndexSet:
    """A strictly increasing subset of {1, ..., k} with its ambient level."""

    k: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, v in enumerate(self.members):
            if not 1 <= v <= self.k:
                raise ValueError(f"member {v} outside 1..{self.k}")
            if i and self.members[i - 1] >= v:
                raise ValueError("members must be strictly increasing")

    @classmethod
    def of(cls, k: int, members) -> "IndexSet":
        ms = tuple(sorted(members))
        if len(set(ms)) != len(ms):
            raise ValueError("members must be distinct")
        return cls(k, ms)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def union(self, other: "IndexSet") -> "IndexSet":
        if set(self.members) & set(other.members):
            raise ValueError("union of non-disjoint index sets")
        return IndexSet.of(self.k, self.members + other.members)


def all_index_sets(k: int):
    """All 2^k subsets in a fixed canonical (bitmask) order."""
    for mask in range(1 << k):
        yield IndexSet.of(k, tuple(i + 1 for i in range(k) if mask >> i & 1))


def kappa(I: IndexSet) -> KVector:
    """Entry alpha counts the members <= alpha."""
    return KVector(tuple(sum(1 for i in I.members if i <= a) for a in range(1, I.k + 1)))


def kappa_single(k: int, i: int) -> KVector:
    """kappa of the singleton {i}; elements above k contribute nothing."""
    return KVector(tuple(1 if i <= a else 0 for a in range(1, k + 1)))


def kappa_interval(k: int, lo: int, hi: int) -> KVector:
    """kappa of the interval [lo, hi]; empty when lo > hi."""
    return KVector(
        tuple(max(0, min(hi, a) - lo + 1) if lo <= hi else 0 for a in range(1, k + 1))
    )


def epsilon(I: IndexSet) -> KVector:
    """Entry alpha is [alpha in I] - [alpha+1 in I]."""
    ms = set(I.members)
    return KVector(
        tuple((1 if a in ms else 0) - (1 if a + 1 in ms else 0) for a in range(1, I.k + 1))
    )


def set_leq(J: IndexSet, Jp: IndexSet) -> bool:
    """Partial order: J <= Jp iff kappa(J) <= kappa(Jp) componentwise."""
    if J.k != Jp.k:
        raise ValueError("index sets live at different levels")
    return kappa(J) <= kappa(Jp)


@dataclass(frozen=True)
class ComplementLabels:
    """Labelling of [l1+1, k] \\ J.

    vprime[i-1] is v'_i for i = 1..p, with the literal padding value k+1
    on indices below t; w holds the leftover labels, nonempty only when
    l1 + |J| < k.
    """

    p: int
    t: int
    vprime: tuple[int, ...]
    w: tuple[int, ...]


def label_complement(J: IndexSet, l1: int) -> ComplementLabels:
    """Split and label the complement of J inside [l1+1, k]."""
    k = J.k
    if not 0 <= l1 <= k:
        raise ValueError(f"l1={l1} outside 0..{k}")
    b = len(J)
    p = sum(1 for v in J.members if v <= l1)
    t = max(1, l1 + b - k + 1)
    comp = [v for v in range(l1 + 1, k + 1) if v not in J.members]
    vprime = [k + 1] * p
    for j, value in enumerate(comp[:p]):
        vprime[p - 1 - j] = value
    w = tuple(comp[p:])
    return ComplementLabels(p, t, tuple(vprime), w)


@dataclass(frozen=True)
class AdmissibleData:
    """An (I, J, l1, l2) bundle with the complement labelling attached.

    |J| and |J| - |I| are always derived, never stored.
    """

    I: IndexSet
    J: IndexSet
    l1: int
    l2: int
    labels: ComplementLabels

    @classmethod
    def build(cls, I: IndexSet, J: IndexSet, l1: int, l2: int) -> "AdmissibleData":
        if I.k != J.k:
            raise ValueError("I and J live at different levels")
        return cls(I, J, l1, l2, label_complement(J, l1))

    @property
    def a(self) -> int:
        return len(self.I)

    @property
    def b(self) -> int:
        return len(self.J)

    @property
    def c(self) -> int:
        return self.b - self.a

    @property
    def p(self) -> int:
        return self.labels.p

    @property
    def t(self) -> int:
        return self.labels.t

    @property
    def vprime(self) -> tuple[int, ...]:
        return self.labels.vprime

    @property
    def w(self) -> tuple[int, ...]:
        return self.labels.w

    def is_admissible(self) -> bool:
        if self.a > self.labels.p or self.b > self.l2:
            return False
        for i in range(self.a):
            u = self.I.members[i]
            v = self.J.members[i]
            if not v <= u < self.labels.vprime[i]:
                return False
        return True


def is_admissible(I: IndexSet, J: IndexSet, l1: int, l2: int) -> bool:
    """(l1, l2)-admissibility: |I| <= p, |J| <= l2 and v_i <= u_i < v'_i."""
    return AdmissibleData.build(I, J, l1, l2).is_admissible()


def is_l1_admissible(I: IndexSet, J: IndexSet, l1: int) -> bool:
    """(l1, k)-admissibility; the second cardinality bound is vacuous."""
    return is_admissible(I, J, l1, I.k)


def primed_labels(k: int, l1: int, a: int, c: int) -> tuple[int, int, int]:
    """The label triple one recursion step down, from (l1, a, c)."""
    l1p = l1 + c - a - pos_part(l1 + c - k)
    l2p = k - c
    return l1p, l2p, l1p + l2p - k


def tilde_pair(I: IndexSet, J: IndexSet, l1: int) -> tuple[IndexSet, IndexSet]:
    """Map an l1-admissible pair (I, J) to (tilde I, tilde J).

    Identity when l1 + c >= k.  Otherwise tilde I absorbs the complement
    labels with index <= |I| together with the w block, and tilde J keeps
    the part of J below the first absorbed label.
    """
    if not is_l1_admissible(I, J, l1):
        raise ValueError("pair is not l1-admissible")
    k = I.k
    a = len(I)
    c = len(J) - a
    if l1 + c >= k:
        return I, J
    labels = label_complement(J, l1)
    comp = [v for v in range(l1 + 1, k + 1) if v not in J.members]
    absorbed = comp[labels.p - a:]
    tI = IndexSet.of(k, I.members + tuple(absorbed))
    boundary = absorbed[0]
    tJ = IndexSet.of(k, tuple(v for v in J.members if v < boundary))
    return tI, tJ


def untilde_pair(tI: IndexSet, tJ: IndexSet, l1: int) -> tuple[IndexSet, IndexSet]:
    """The inverse of tilde_pair on pairs satisfying its image conditions.

    The split size a is forced: |tJ| = a + u_{a+1} - l1 - 1 is strictly
    increasing in a, so at most one a can match.
    """
    k = tI.k
    u = tI.members
    bt = len(tJ)
    split = None
    for a in range(len(u)):
        if a + u[a] - l1 - 1 == bt:
            split = a
            break
    if split is None:
        raise ValueError("no admissible split: |tJ| matches no a")
    ua1 = u[split]
    if ua1 < l1 + 1:
        raise ValueError(f"element u_{split + 1}={ua1} must be >= l1+1")
    for i in range(split):
        if tJ.members[i] > u[i]:
            raise ValueError("condition v_i <= u_i fails")
    if bt and tJ.members[-1] >= ua1:
        raise ValueError("tilde J must stay below u_{a+1}")
    I = IndexSet.of(k, u[:split])
    extra = tuple(v for v in range(ua1, k + 1) if v not in tI.members)
    J = IndexSet.of(k, tJ.members + extra)
    return I, J


def j_min(I: IndexSet, c: int, l1: int, tI: IndexSet | None = None) -> IndexSet:
    """Minimal J in the kappa order among the admissible completions of I.

    For l1 + c >= k only I is needed; otherwise the fixed tilde I must be
    supplied and its first |I| members must be exactly I.
    """
    k = I.k
    a = len(I)
    b = a + c
    if c < 0 or b > k:
        raise ValueError(f"need 0 <= c and a+c <= k, got a={a}, c={c}")
    if l1 + c >= k:
        if tI is not None and tI != I:
            raise ValueError("tilde I must equal I when l1 + c >= k")
        head = [min(I.members[i - 1], k - b + i) for i in range(1, a + 1)]
        return IndexSet.of(k, tuple(head) + tuple(range(k - c + 1, k + 1)))
    if tI is None:
        raise ValueError("the l1 + c < k branch needs tilde I")
    if tI.members[:a] != I.members:
        raise ValueError("tilde I must start with I")
    if len(tI) != a + k - l1 - c:
        raise ValueError("tilde I has the wrong cardinality")
    ua1 = tI.members[a]
    if ua1 < l1 + 1:
        raise ValueError("tilde I violates u_{a+1} >= l1 + 1")
    head = [min(I.members[i - 1], l1 - a + i) for i in range(1, a + 1)]
    mid = list(range(l1 + 1, ua1))
    rest = [v for v in range(ua1, k + 1) if v not in tI.members]
    return IndexSet.of(k, tuple(head + mid + rest))


def i_max(J: IndexSet, l1: int, l3: int) -> IndexSet:
    """The largest admissible first component: the min(l3, p) smallest of J."""
    p = label_complement(J, l1).p
    return IndexSet.of(J.k, J.members[: min(l3, p)])


def rho(I: IndexSet, J: IndexSet, l1: int) -> KVector:
    """Lower bounds on the bottom riggings of mu, from the pair (I, J)."""
    if not is_l1_admissible(I, J, l1):
        raise ValueError("pair is not l1-admissible")
    k = I.k
    labels = label_complement(J, l1)
    a = len(I)
    out = KVector.zero(k)
    for i in range(1, a + 1):
        out = out + kappa_single(k, J.members[i - 1]) - kappa_single(k, I.members[i - 1])
    for i in range(a + 1, labels.p + 1):
        out = out + kappa_single(k, J.members[i - 1]) - kappa_single(k, labels.vprime[i - 1])
    return out


def sigma(J: IndexSet, l2: int) -> KVector:
    """Lower bounds on the bottom riggings of nu: kappa[1, l2] - kappa(J)."""
    if len(J) > l2:
        raise ValueError(f"|J|={len(J)} exceeds l2={l2}")
    return kappa_interval(J.k, 1, l2) - kappa(J)


def delta_r(I: IndexSet, J: IndexSet, l1: int, l2: int) -> KVector:
    """Change of the r upper bounds across one recursion step.

    Equals vacancy_P at (l1) minus vacancy_P at (l1') whenever the
    partitions differ by epsilon(I), epsilon(J); l2 plays no role here
    and is accepted only for symmetry with delta_s.
    """
    k = I.k
    a = len(I)
    c = len(J) - a
    l1p, _, _ = primed_labels(k, l1, a, c)
    return (
        kappa(J)
        - kappa(I)
        - kappa(I)
        + kappa_interval(k, l1p + 1, k)
        - kappa_interval(k, l1 + 1, k)
    )


def delta_s(I: IndexSet, J: IndexSet, l1: int, l2: int) -> KVector:
    """Change of the s upper bounds across one recursion step."""
    k = I.k
    a = len(I)
    c = len(J) - a
    _, l2p, _ = primed_labels(k, l1, a, c)
    return (
        kappa(I)
        - kappa(J)
        - kappa(J)
        + kappa_interval(k, 1, l2)
        + kappa_interval(k, l2p + 1, k)
    )


def rho_prime(I: IndexSet, J: IndexSet, l1: int) -> KVector:
    """Shifted lower bounds for r: kappa(tilde I) - kappa[l1'+1, k]."""
    if not is_l1_admissible(I, J, l1):
        raise ValueError("pair is not l1-admissible")
    k = I.k
    a = len(I)
    c = len(J) - a
    l1p, _, _ = primed_labels(k, l1, a, c)
    tI, _ = tilde_pair(I, J, l1)
    return kappa(tI) - kappa_interval(k, l1p + 1, k)


def sigma_prime(I: IndexSet, J: IndexSet, l1: int) -> KVector:
    """Shifted lower bounds for s: kappa(J) - kappa(I) - kappa[l2'+1, k]."""
    if not is_l1_admissible(I, J, l1):
        raise ValueError("pair is not l1-admissible")
    k = I.k
    a = len(I)
    c = len(J) - a
    _, l2p, _ = primed_labels(k, l1, a, c)
    return kappa(J) - kappa(I) - kappa_interval(k, l2p + 1, k)
