"""Univariate polynomial algebra over the tower fields.

Dense representation: a Poly is a trimmed low-to-high coefficient tuple over
one field descriptor (degrees here stay small, so no sparse bookkeeping).
On top of the ring operations this module provides irreducibility testing,
ordered enumeration of monic irreducibles, distinct-degree splitting, the
counting formulas for irreducibles with prescribed trace, and the explicit
factorization shape of the additive polynomial x^q - x - alpha.

Enumeration order is lexicographic with the constant term varying fastest,
i.e. sorted by the coefficient vector read from the leading end down.  The
text format is terms "c*x^k" joined by "+", e.g. "x^2+2" or "(t0+1)*x^2+3".
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf
from ._numutil import divisors, factorize, prime_factors, prime_power


class Poly:
    """Dense univariate polynomial over a described finite field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        self.field = field
        cs = tuple(field.elem(c) if not isinstance(c, gf.FieldElem) else c
                   for c in coeffs)
        for c in cs:
            if c.field is not field:
                raise ValueError("coefficient belongs to a different field")
        n = len(cs)
        while n and not cs[n - 1]:
            n -= 1
        self.coeffs = cs[:n]

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero(), field.one()))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (field.elem(c),))

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, (field.zero(),) * k + (field.elem(c),))

    @classmethod
    def from_string(cls, field, text, var="x"):
        return cls(field, gf.parse_poly_coeffs(field, text, {var}))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self):
        """Degree, with float('-inf') as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> gf.FieldElem:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        if self.is_monic:
            return self
        inv = self.lc.inverse()
        return Poly(self.field, tuple(c * inv for c in self.coeffs))

    def __getitem__(self, k: int) -> gf.FieldElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def derivative(self) -> "Poly":
        return Poly(self.field,
                    tuple(c * k for k, c in enumerate(self.coeffs) if k))

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (int, gf.FieldElem)):
            return Poly.constant(self.field, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        out = [self.field.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = other.lc.inverse()
        quot = [self.field.zero()] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv
            k = len(rem) - 1 - db
            quot[k] = c
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - c * other.coeffs[j]
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return Poly(self.field, quot), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, v):
        """Evaluate at a field element (embedding coefficients if v lives in
        an extension of the coefficient field)."""
        if isinstance(v, int):
            v = self.field.elem(v)
        if v.field is self.field:
            coeffs = self.coeffs
            acc = self.field.zero()
        else:
            coeffs = [gf.embed(c, v.field) for c in self.coeffs]
            acc = v.field.zero()
        for c in reversed(coeffs):
            acc = acc * v + c
        return acc

    # -- comparisons -----------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, gf.FieldElem)):
            return self == Poly.constant(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field._key, tuple(c.index for c in self.coeffs)))

    def to_string(self, var="x") -> str:
        return gf.format_polynomial(self.coeffs, var)

    def __repr__(self):
        return self.to_string()

    @property
    def index_key(self) -> tuple:
        """Deterministic sort key: (degree, coefficient indices high-to-low)."""
        return (len(self.coeffs),
                tuple(c.index for c in reversed(self.coeffs)))


# ---------------------------------------------------------------------------
# gcd / modular arithmetic


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def pow_mod(a: Poly, e: int, mod: Poly) -> Poly:
    """a**e mod `mod` by square-and-multiply."""
    if e < 0:
        raise ValueError("pow_mod exponent must be >= 0")
    result = Poly.one(a.field) % mod
    a = a % mod
    while e:
        if e & 1:
            result = (result * a) % mod
        a = (a * a) % mod
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# irreducibility and enumeration


def _x_power_q_tower(k: int, q: int, mod: Poly) -> Poly:
    """x ** (q**k) mod `mod`, via k successive q-th powers."""
    h = Poly.x(mod.field) % mod
    for _ in range(k):
        h = pow_mod(h, q, mod)
    return h


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test for a monic polynomial of degree >= 1.

    f is irreducible iff x^(q^d) = x mod f and gcd(x^(q^(d/l)) - x, f) = 1
    for every prime l dividing d.
    """
    if not f.is_monic:
        raise ValueError("irreducibility test requires a monic polynomial")
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility test requires degree >= 1")
    if d == 1:
        return True
    q = f.field.order
    x = Poly.x(f.field)
    for ell in prime_factors(d):
        if gcd(_x_power_q_tower(d // ell, q, f) - x, f).degree != 0:
            return False
    return _x_power_q_tower(d, q, f) == x % f


def monic_irreducibles(d: int, field) -> list[Poly]:
    """All monic irreducibles of degree d, lexicographic by coefficient
    vector with the constant term least significant."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    one = field.one()
    order = field.order
    if d == 1:
        return [Poly(field, (c, one)) for c in field.elements()]
    elems = list(field.elements())
    powers = [[e ** j for j in range(d + 1)] for e in elems]
    out = []
    # enumerate the upper coefficients (c_1 .. c_{d-1}); for each tail the
    # constant terms producing a root are exactly {-tail(a)}, so the root
    # filter costs one evaluation per candidate instead of q
    for upper_idx in range(order ** (d - 1)):
        upper = []
        t = upper_idx
        for _ in range(d - 1):
            t, r = divmod(t, order)
            upper.append(field.from_index(r))
        rooted = set()
        for pw in powers:
            acc = pw[d]
            for j, c in enumerate(upper, start=1):
                if c:
                    acc = acc + c * pw[j]
            rooted.add((-acc).index)
        for c0 in elems:
            if c0.index in rooted:
                continue
            f = Poly(field, (c0, *upper, one))
            # no linear factor; degrees up to 5 then need only a check for
            # quadratic factors, higher degrees get the full test
            if d <= 3:
                out.append(f)
            elif d <= 5:
                x = Poly.x(field)
                if gcd(_x_power_q_tower(2, order, f) - x, f).degree == 0:
                    out.append(f)
            elif is_irreducible(f):
                out.append(f)
    return out


def poly_trace(f: Poly) -> gf.FieldElem:
    """The coefficient of x^(d-1) of a monic polynomial of degree d.

    Note the sign convention: the trace of the roots of an irreducible of
    degree d equals the negative of this coefficient.
    """
    if not f.is_monic:
        raise ValueError("polynomial trace requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("polynomial trace requires degree >= 1")
    return f[f.degree - 1]


def shifted(f: Poly, c) -> Poly:
    """f(x + c)."""
    field = f.field
    c = field.elem(c) if not isinstance(c, gf.FieldElem) else c
    xc = Poly(field, (c, field.one()))
    acc = Poly.zero(field)
    for coef in reversed(f.coeffs):
        acc = acc * xc + coef
    return acc


# ---------------------------------------------------------------------------
# counting formulas


def moebius(n: int) -> int:
    """Moebius function: 1 at 1, 0 on non-squarefree n, else (-1)^#primes."""
    if n < 1:
        raise ValueError("moebius is defined for n >= 1")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def count_irreducibles(d: int, q: int) -> int:
    """N(d, q) = (1/d) * sum over a | d of mu(a) q^(d/a)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if prime_power(q) is None:
        raise ValueError("q must be a prime power")
    total = sum(moebius(a) * q ** (d // a) for a in divisors(d))
    assert total % d == 0
    return total // d


def count_irreducibles_trace(d: int, q: int, gamma) -> int:
    """Number of monic irreducibles of degree d over GF(q) whose x^(d-1)
    coefficient equals gamma.

    For gamma != 0 this is (1/(qd)) * sum over a | d, p not dividing a, of
    mu(a) q^(d/a) (independent of which nonzero gamma).  For gamma = 0,
    write d = p^k b with p not dividing b; then it is
    (1/(dq)) sum_{a|b} mu(a) q^(d/a) - (eps/d) sum_{a|b} mu(a) q^(d/(ap))
    with eps = 1 when k > 0 and 0 when k = 0.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    pp = prime_power(q)
    if pp is None:
        raise ValueError("q must be a prime power")
    p = pp[0]
    if gamma == 0:
        b, k = d, 0
        while b % p == 0:
            b //= p
            k += 1
        s1 = sum(moebius(a) * q ** (d // a) for a in divisors(b))
        assert s1 % (d * q) == 0
        n0 = s1 // (d * q)
        if k > 0:
            s2 = sum(moebius(a) * q ** (d // (a * p)) for a in divisors(b))
            assert s2 % d == 0
            n0 -= s2 // d
        return n0
    total = sum(moebius(a) * q ** (d // a)
                for a in divisors(d) if a % p != 0)
    assert total % (q * d) == 0
    return total // (q * d)


@dataclass(frozen=True)
class IrreducibleCensus:
    """Counts of monic irreducibles of one degree, split by trace value."""

    d: int
    q: int
    total: int
    by_trace: dict

    def check_total(self) -> bool:
        return self.total == sum(self.by_trace.values())


def census(d: int, field) -> IrreducibleCensus:
    by_trace = {g: count_irreducibles_trace(d, field.order, g)
                for g in field.elements()}
    return IrreducibleCensus(d=d, q=field.order,
                             total=count_irreducibles(d, field.order),
                             by_trace=by_trace)


# ---------------------------------------------------------------------------
# factorization structure


def distinct_degree_split(f: Poly) -> dict[int, Poly]:
    """Partition a squarefree monic polynomial into products of its
    irreducible factors grouped by degree (via gcd with x^(q^i) - x)."""
    if not f.is_monic:
        raise ValueError("distinct-degree split requires a monic polynomial")
    if gcd(f, f.derivative()).degree != 0:
        raise ValueError("input polynomial is not squarefree")
    q = f.field.order
    x = Poly.x(f.field)
    out: dict[int, Poly] = {}
    g = f
    h = x % g
    i = 1
    while g.degree >= 2 * i:
        h = pow_mod(h, q, g)
        d = gcd(h - x, g)
        if d.degree > 0:
            out[i] = d
            g = g // d
            h = h % g
        i += 1
    if g.degree > 0:
        out[g.degree] = g
    return out


@dataclass(frozen=True)
class ArtinSchreierShape:
    """Factorization of x^q - x - alpha over the field of alpha.

    Either the polynomial splits into q linear factors (roots listed), or
    it breaks into q/p monic irreducible factors of degree p.
    """

    alpha: gf.FieldElem
    q: int
    m: int
    splits_linearly: bool
    roots: tuple
    factors: tuple

    def polynomial(self) -> Poly:
        field = self.alpha.field
        return (Poly.monomial(field, self.q) - Poly.x(field)
                - Poly.constant(field, self.alpha))


def artin_schreier_shape(alpha: gf.FieldElem, q: int, m: int) -> ArtinSchreierShape:
    """Factor x^q - x - alpha over GF(q^m) by the trace criterion.

    When the relative trace of alpha down to GF(q) vanishes the roots are
    y + b for b in GF(q) with y one solved root.  Otherwise the roots are
    grouped in a degree-p splitting field L and each group's minimal
    polynomial x^p - T^(p-1) x - (z^p - T^(p-1) z) is expanded, where T is
    the trace of alpha and z a root in L.
    """
    field = alpha.field
    p = field.characteristic
    if field.order != q ** m:
        raise ValueError("field order is inconsistent with (q, m)")
    sub = gf.subfield_descriptor(field, q)
    if sub is None:
        raise ValueError(
            "field tower has no level of order q; build GF(q^m) as an "
            "extension of GF(q)")
    x = Poly.x(field)
    trace = gf.trace_to_subfield(alpha, m, q)
    if not trace:
        y = gf.artin_schreier_solve(alpha, q)
        assert y is not None
        roots = sorted((y + b for b in gf.subfield_elements(field, q)),
                       key=lambda e: e.index)
        factors = tuple(x - r for r in roots)
        return ArtinSchreierShape(alpha, q, m, True, tuple(roots), factors)

    ext = field.extend(degree=p)
    alpha_up = gf.embed(alpha, ext)
    z0 = gf.artin_schreier_solve(alpha_up, q)
    assert z0 is not None
    trace_up = gf.embed(trace, ext)
    tpow = trace ** (p - 1)
    tpow_up = gf.embed(tpow, ext)

    # coset representatives of the prime-field multiples of the trace
    # inside GF(q): each coset is one Frobenius orbit of roots
    sub_elems = gf.subfield_elements(field, q)
    steps = [trace * field.elem(i) for i in range(p)]
    covered = set()
    factors = []
    for b in sub_elems:
        if b.index in covered:
            continue
        for st in steps:
            covered.add((b + st).index)
        z = z0 + gf.embed(b, ext)
        const = gf.to_base_field(z ** p - tpow_up * z)
        factors.append(Poly(field, (-const, -tpow)
                            + (field.zero(),) * (p - 2) + (field.one(),)))
    factors.sort(key=lambda f: f.index_key)
    return ArtinSchreierShape(alpha, q, m, False, (), tuple(factors))
