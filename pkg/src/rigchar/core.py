"""Foundational types for level-restricted rigged partitions.

Parameters, partitions stored by row-length multiplicities, riggings,
k-vectors, the tau lower bound on riggings and the vacancy-number upper
bounds.  Everything here is an immutable value and every operation is a
pure function, so all of it is safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass


def pos_part(x: int) -> int:
    """max(x, 0), written x+ in the formulas."""
    return x if x > 0 else 0


def neg_part(x: int) -> int:
    """max(-x, 0), written x-."""
    return -x if x < 0 else 0


# Fault-injection knob for the verification harness self-test: a nonzero
# skew corrupts tau, so a `verify` run must report a counterexample.
# Never set outside that test path.
TAU_SKEW = 0


@dataclass(frozen=True)
class Params:
    """The parameter tuple (k, l1, l2, l3, M, N).

    k is the level, l1/l2/l3 the highest-weight labels subject to
    0 <= l1, l2 <= k and 0 <= l3 <= min(l1, l2), and M/N the degree
    cutoffs.  Illegal labels are rejected at construction.
    """

    k: int
    l1: int
    l2: int
    l3: int
    M: int
    N: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"level k must be >= 1, got {self.k}")
        if not (0 <= self.l1 <= self.k and 0 <= self.l2 <= self.k):
            raise ValueError(
                f"labels l1={self.l1}, l2={self.l2} must lie in [0, {self.k}]"
            )
        if not (0 <= self.l3 <= min(self.l1, self.l2)):
            raise ValueError(
                f"label l3={self.l3} must lie in [0, min(l1, l2)={min(self.l1, self.l2)}]"
            )
        if self.M < 0 or self.N < 0:
            raise ValueError(f"cutoffs M={self.M}, N={self.N} must be >= 0")


@dataclass(frozen=True)
class KVector:
    """An integer vector indexed 1..k (the ambient level)."""

    entries: tuple[int, ...]

    @staticmethod
    def zero(k: int) -> "KVector":
        return KVector((0,) * k)

    @property
    def k(self) -> int:
        return len(self.entries)

    def __getitem__(self, alpha: int) -> int:
        """1-based component access."""
        if not 1 <= alpha <= len(self.entries):
            raise IndexError(f"component {alpha} outside 1..{len(self.entries)}")
        return self.entries[alpha - 1]

    def _check(self, other: "KVector") -> None:
        if len(self.entries) != len(other.entries):
            raise ValueError("k-vector length mismatch")

    def __add__(self, other: "KVector") -> "KVector":
        self._check(other)
        return KVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "KVector") -> "KVector":
        self._check(other)
        return KVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "KVector":
        return KVector(tuple(-a for a in self.entries))

    def plus(self) -> "KVector":
        """Componentwise positive part x+."""
        return KVector(tuple(pos_part(a) for a in self.entries))

    def minus(self) -> "KVector":
        """Componentwise negative part x-."""
        return KVector(tuple(neg_part(a) for a in self.entries))

    def is_nonneg(self) -> bool:
        return all(a >= 0 for a in self.entries)

    def __le__(self, other: "KVector") -> bool:
        """Componentwise partial order."""
        self._check(other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __ge__(self, other: "KVector") -> bool:
        self._check(other)
        return all(a >= b for a, b in zip(self.entries, other.entries))


@dataclass(frozen=True)
class Partition:
    """A level-k restricted partition stored as row-length multiplicities.

    mult[alpha-1] is the number of rows of length alpha, for alpha = 1..k.
    Storing multiplicities rather than row lists makes the level
    restriction structural and matches how every formula is written.
    """

    k: int
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if len(self.mult) != self.k:
            raise ValueError(f"need {self.k} multiplicities, got {len(self.mult)}")
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be >= 0")

    @classmethod
    def empty(cls, k: int) -> "Partition":
        return cls(k, (0,) * k)

    @classmethod
    def from_rows(cls, k: int, rows) -> "Partition":
        mult = [0] * k
        for part in rows:
            if not 1 <= part <= k:
                raise ValueError(f"row length {part} outside 1..{k}")
            mult[part - 1] += 1
        return cls(k, tuple(mult))

    def m(self, alpha: int) -> int:
        """Multiplicity of rows of length alpha (1-based)."""
        return self.mult[alpha - 1]

    def rows(self) -> tuple[int, ...]:
        """Row lengths in weakly decreasing order."""
        out = []
        for alpha in range(self.k, 0, -1):
            out.extend([alpha] * self.mult[alpha - 1])
        return tuple(out)


@dataclass(frozen=True)
class Rigging:
    """One weakly decreasing list of non-negative integers per row length."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            for i, v in enumerate(row):
                if v < 0:
                    raise ValueError("rigging entries must be >= 0")
                if i and row[i - 1] < v:
                    raise ValueError(f"rigging row {row} is not weakly decreasing")

    @classmethod
    def zero(cls, p: Partition) -> "Rigging":
        return cls(tuple((0,) * m for m in p.mult))

    def row(self, alpha: int) -> tuple[int, ...]:
        return self.rows[alpha - 1]

    def total(self) -> int:
        return sum(sum(row) for row in self.rows)

    def flat(self) -> tuple[int, ...]:
        out = []
        for row in self.rows:
            out.extend(row)
        return tuple(out)


@dataclass(frozen=True)
class RiggedPair:
    """A pair of rigged partitions (mu, r; nu, s) at a common level."""

    mu: Partition
    r: Rigging
    nu: Partition
    s: Rigging

    def __post_init__(self) -> None:
        if self.mu.k != self.nu.k:
            raise ValueError("mu and nu must share a level")
        if tuple(len(row) for row in self.r.rows) != self.mu.mult:
            raise ValueError("r row counts do not match mu multiplicities")
        if tuple(len(row) for row in self.s.rows) != self.nu.mult:
            raise ValueError("s row counts do not match nu multiplicities")

    @property
    def k(self) -> int:
        return self.mu.k


def weight(p: Partition) -> int:
    """Total number of boxes, sum over alpha of alpha * m_alpha."""
    return sum(alpha * m for alpha, m in enumerate(p.mult, start=1))


def tau(alpha: int, beta: int, p: Params) -> int:
    """Lower bound on r[alpha] + s[beta]: min(a,b) - (a-l1)+ - (b-l2)+ - l3."""
    return (
        min(alpha, beta)
        - pos_part(alpha - p.l1)
        - pos_part(beta - p.l2)
        - p.l3
        + TAU_SKEW
    )


def tau_min_form(alpha: int, beta: int, p: Params) -> int:
    """The equivalent eight-term minimum form of the tau bound.

    Kept as an independent route so tests can compare it with tau().
    """
    return (
        min(
            alpha,
            beta,
            p.l1,
            p.l2,
            p.l1 + beta - alpha,
            p.l2 + alpha - beta,
            p.l1 + p.l2 - alpha,
            p.l1 + p.l2 - beta,
        )
        - p.l3
    )


def vacancy_P(mu: Partition, nu: Partition, M: int, l: int) -> KVector:
    """Upper bounds P on the riggings of mu, depending on both partitions."""
    if mu.k != nu.k:
        raise ValueError("mu and nu must share a level")
    k = mu.k
    entries = []
    for alpha in range(1, k + 1):
        acc = alpha * M - pos_part(alpha - l)
        for beta in range(1, k + 1):
            acc += min(alpha, beta) * (nu.mult[beta - 1] - 2 * mu.mult[beta - 1])
        entries.append(acc)
    return KVector(tuple(entries))


def vacancy_Q(mu: Partition, nu: Partition, N: int, l: int) -> KVector:
    """Upper bounds Q on the riggings of nu: vacancy_P with the roles swapped."""
    return vacancy_P(nu, mu, N, l)


def boundary_ok(p: Params, mu: Partition, nu: Partition) -> bool:
    """The M=0 / N=0 boundary inequalities on the weights.

    Given the rigging upper bounds, this is equivalent to requiring both
    vacancy vectors to be componentwise non-negative.
    """
    m = weight(mu)
    n = weight(nu)
    if p.M == 0 and n - 2 * m < p.k - p.l1:
        return False
    if p.N == 0 and m - 2 * n < p.k - p.l2:
        return False
    return True
