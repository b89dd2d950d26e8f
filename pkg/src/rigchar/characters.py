"""Exact sparse Laurent polynomials in (z1, z2, q) and the character formulas.

Gaussian binomials, the quadratic degree of a partition pair, brute-force
characters of the enumerated sets, the closed fermionic sum, the character
recursion check, and the specialised two-variable character.

Coefficients are Python integers, hence arbitrary precision; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

from .admissible import primed_labels
from .bijection import Report, _params_obj
from .core import (
    Params,
    Partition,
    RiggedPair,
    boundary_ok,
    pos_part,
    vacancy_P,
    vacancy_Q,
    weight,
)
from .riggedsets import enumerate_partitions, enumerate_total, weight_bound

_AXES = {"z1": 0, "z2": 1, "q": 2}


class LaurentPoly:
    """Sparse Laurent polynomial in (z1, z2, q) over the integers.

    Terms map exponent triples to nonzero coefficients.  Instances are
    immutable by convention; all operations return new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[(int(exps[0]), int(exps[1]), int(exps[2]))] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, e1: int = 0, e2: int = 0, eq: int = 0) -> "LaurentPoly":
        return cls({(e1, e2, eq): coeff})

    @classmethod
    def variable(cls, name: str) -> "LaurentPoly":
        exps = [0, 0, 0]
        exps[_AXES[name]] = 1
        return cls({tuple(exps): 1})

    def terms(self):
        """Items in canonical (exponent-lexicographic) order."""
        return sorted(self._terms.items())

    def coeff(self, e1: int, e2: int, eq: int) -> int:
        return self._terms.get((e1, e2, eq), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = out.get(exps, 0) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({exps: c * other for exps, c in self._terms.items()})
        out: dict = {}
        for (a1, a2, a3), ca in self._terms.items():
            for (b1, b2, b3), cb in other._terms.items():
                key = (a1 + b1, a2 + b2, a3 + b3)
                new = out.get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    del out[key]
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def substitute(self, images: dict) -> "LaurentPoly":
        """Substitute variables by monomials (names mapped to single-term
        polynomials, possibly with negative exponents); a ring morphism."""
        monos = {}
        for name, poly in images.items():
            axis = _AXES[name]
            items = list(poly._terms.items())
            if len(items) != 1:
                raise ValueError(f"image of {name} must be a single monomial")
            exps, coeff = items[0]
            monos[axis] = (coeff, exps)
        out: dict = {}
        for exps, coeff in self._terms.items():
            new = [0, 0, 0]
            c = coeff
            for axis in range(3):
                e = exps[axis]
                if axis in monos:
                    mc, mexps = monos[axis]
                    c *= _int_pow(mc, e)
                    for i in range(3):
                        new[i] += mexps[i] * e
                else:
                    new[axis] += e
            key = tuple(new)
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    def specialize(self, z1: int = 1, z2: int = 1, q: int = 1) -> int:
        """Exact integer evaluation; negative exponents need unit values."""
        total = 0
        for (a, b, d), c in self._terms.items():
            total += c * _int_pow(z1, a) * _int_pow(z2, b) * _int_pow(q, d)
        return total

    def to_text(self, names: tuple[str, str, str] = ("z1", "z2", "q")) -> str:
        """Canonical text form, the golden-file format."""
        if not self._terms:
            return "0"
        bits = []
        for exps, c in self.terms():
            var_parts = []
            for name, e in zip(names, exps):
                if e == 0:
                    continue
                var_parts.append(name if e == 1 else f"{name}^{e}")
            if not var_parts:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(var_parts))
            elif c == -1:
                bits.append("-" + "*".join(var_parts))
            else:
                bits.append(f"{c}*" + "*".join(var_parts))
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"


def _int_pow(base: int, e: int) -> int:
    if e >= 0:
        return base ** e
    if base == 1:
        return 1
    if base == -1:
        return -1 if e % 2 else 1
    raise ArithmeticError(f"negative power {e} of non-unit {base}")


def substitute_monomial(f: LaurentPoly, images: dict) -> LaurentPoly:
    """Module-level alias for LaurentPoly.substitute."""
    return f.substitute(images)


_GAUSS_CACHE: dict[tuple[int, int], LaurentPoly] = {}


def gauss_binomial(m: int, n: int) -> LaurentPoly:
    """The Gaussian polynomial [m over n] in q; zero whenever m < n.

    Computed by the q-Pascal recurrence with memoisation; the product
    formula lives in gauss_binomial_product as an independent route.
    """
    if n < 0:
        raise ValueError("lower index must be >= 0")
    if m < n:
        return LaurentPoly.zero()
    if n == 0:
        return LaurentPoly.one()
    key = (m, n)
    hit = _GAUSS_CACHE.get(key)
    if hit is None:
        hit = gauss_binomial(m - 1, n - 1) + LaurentPoly.monomial(1, eq=n) * gauss_binomial(m - 1, n)
        _GAUSS_CACHE[key] = hit
    return hit


def _q_product(lo: int, hi: int) -> dict[int, int]:
    """prod_{i=lo..hi} (1 - q^i) as a plain q-exponent dict."""
    poly = {0: 1}
    for i in range(lo, hi + 1):
        out: dict[int, int] = {}
        for e, c in poly.items():
            out[e] = out.get(e, 0) + c
            out[e + i] = out.get(e + i, 0) - c
        poly = {e: c for e, c in out.items() if c}
    return poly


def _q_divexact(num: dict[int, int], den: dict[int, int]) -> dict[int, int]:
    """Exact division of q-polynomials; a nonzero remainder is a hard error."""
    num = dict(num)
    quot: dict[int, int] = {}
    dlead = max(den)
    dcoef = den[dlead]
    while num:
        nlead = max(num)
        if nlead < dlead:
            raise ArithmeticError("nonzero remainder in Gaussian-polynomial division")
        c, rem = divmod(num[nlead], dcoef)
        if rem:
            raise ArithmeticError("nonzero remainder in Gaussian-polynomial division")
        e = nlead - dlead
        quot[e] = c
        for de, dc in den.items():
            ne = de + e
            new = num.get(ne, 0) - dc * c
            if new:
                num[ne] = new
            else:
                num.pop(ne, None)
    return quot


def gauss_binomial_product(m: int, n: int) -> LaurentPoly:
    """[m over n] by the product formula and exact polynomial division."""
    if n < 0:
        raise ValueError("lower index must be >= 0")
    if m < n:
        return LaurentPoly.zero()
    num = _q_product(1, m)
    den: dict[int, int] = {}
    for e1, c1 in _q_product(1, n).items():
        for e2, c2 in _q_product(1, m - n).items():
            den[e1 + e2] = den.get(e1 + e2, 0) + c1 * c2
    den = {e: c for e, c in den.items() if c}
    quot = _q_divexact(num, den)
    return LaurentPoly({(0, 0, e): c for e, c in quot.items()})


def degree_D(mu: Partition, nu: Partition, l1: int, l2: int) -> int:
    """The quadratic base degree attached to a partition pair."""
    if mu.k != nu.k:
        raise ValueError("mu and nu must share a level")
    k = mu.k
    total = 0
    for alpha in range(1, k + 1):
        total += pos_part(alpha - l1) * mu.m(alpha)
        total += pos_part(alpha - l2) * nu.m(alpha)
    for alpha in range(1, k + 1):
        for beta in range(1, k + 1):
            a = min(alpha, beta)
            total += a * (
                mu.m(alpha) * mu.m(beta)
                + nu.m(alpha) * nu.m(beta)
                - mu.m(alpha) * nu.m(beta)
            )
    return total


def rig_degree(x: RiggedPair, l1: int, l2: int) -> int:
    """Degree of a rigged pair: the base degree plus all rigging entries."""
    return degree_D(x.mu, x.nu, l1, l2) + x.r.total() + x.s.total()


def char_R(p: Params) -> LaurentPoly:
    """Brute-force character: sum of z1^m z2^n q^degree over every element."""
    acc: dict = {}
    for (m, n), piece in enumerate_total(p).items():
        for x in piece:
            key = (m, n, rig_degree(x, p.l1, p.l2))
            acc[key] = acc.get(key, 0) + 1
    return LaurentPoly(acc)


def fermionic_char(k: int, l1: int, l2: int, M: int, N: int) -> LaurentPoly:
    """The closed-form character as a positive sum of Gaussian products.

    Sums z1^|mu| z2^|nu| q^D times the product of one Gaussian binomial
    per row length over all partition pairs with non-negative vacancy
    vectors, inside the same weight box the enumeration uses.  Negative
    labels give the zero polynomial by convention.
    """
    if l1 < 0 or l2 < 0:
        return LaurentPoly.zero()
    p = Params(k, l1, l2, min(l1, l2), M, N)
    mmax, nmax = weight_bound(p)
    total = LaurentPoly.zero()
    for m in range(mmax + 1):
        for n in range(nmax + 1):
            for mu in enumerate_partitions(m, k):
                for nu in enumerate_partitions(n, k):
                    P = vacancy_P(mu, nu, M, l1)
                    if not P.is_nonneg():
                        continue
                    Q = vacancy_Q(mu, nu, N, l2)
                    if not Q.is_nonneg():
                        continue
                    if not boundary_ok(p, mu, nu):
                        continue
                    term = LaurentPoly.monomial(1, m, n, degree_D(mu, nu, l1, l2))
                    for alpha in range(1, k + 1):
                        term = term * gauss_binomial(P[alpha] + mu.m(alpha), mu.m(alpha))
                        term = term * gauss_binomial(Q[alpha] + nu.m(alpha), nu.m(alpha))
                    total = total + term
    return total


def char_recursion_check(k: int, l1: int, l2: int, l3: int, M: int, N: int) -> Report:
    """Exact polynomial comparison of a character against its recursion sum.

    Both sides are computed from the brute-force character, so the check
    is independent of the closed fermionic form.
    """
    if N < 1:
        raise ValueError("the character recursion steps N down; need N >= 1")
    p = Params(k, l1, l2, l3, M, N)
    lhs = char_R(p)
    rhs = LaurentPoly.zero()
    q_z2 = LaurentPoly.monomial(1, 0, 1, 1)
    for a in range(l3 + 1):
        for c in range(l2 - a + 1):
            l1p, l2p, l3p = primed_labels(k, l1, a, c)
            chi = char_R(Params(k, l1p, l2p, l3p, M, N - 1))
            chi = chi.substitute({"z2": q_z2})
            rhs = rhs + LaurentPoly.monomial(1, a, a + c, a + c) * chi
    return Report(
        ok=(lhs == rhs),
        check="char-recursion",
        context={"params": _params_obj(p)},
        detail={"lhs": lhs.to_text(), "rhs": rhs.to_text()},
    )


def sl2_char(k: int, l: int, M: int, N: int) -> LaurentPoly:
    """The two-variable character in (z, q), carried on the z1 axis.

    Combines the closed characters one M-step up under the monomial
    substitution z1 -> q^-1 z^2, z2 -> z^-2, subtracts the companion at
    labels (l-1, k-l-1), and divides by z^l.  The q^-1 on z1 reflects
    that raising the first cutoff by one shifts every e-type generator
    down one loop degree, while f-type generators are untouched; the
    companion embeds degree-preservingly, so the difference carries no
    extra q factor.  The z2 axis of the result must vanish identically
    and is asserted to.
    """
    if not 0 <= l <= k:
        raise ValueError(f"weight l={l} outside 0..{k}")
    if M < 0 or N < 0:
        raise ValueError("cutoffs must be >= 0")
    images = {
        "z1": LaurentPoly.monomial(1, 2, 0, -1),
        "z2": LaurentPoly.monomial(1, -2, 0, 0),
    }
    first = fermionic_char(k, l, k - l, M + 1, N).substitute(images)
    second = fermionic_char(k, l - 1, k - l - 1, M + 1, N).substitute(images)
    poly = first - second
    for (e1, e2, eq), _ in poly.terms():
        if e2 != 0:
            raise AssertionError("z2 axis must vanish after substitution")
    return LaurentPoly.monomial(1, -l, 0, 0) * poly
