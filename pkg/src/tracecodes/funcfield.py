"""The rational function field GF(q)(x) as a concrete object.

Places are monic irreducible polynomials (finite places) plus the single
infinite place; divisors are finite integer formal sums of places.  The
module provides valuations, evaluation of rational functions into residue
fields, Riemann-Roch spaces (genus 0 only: bases are built from an explicit
denominator and the kernel of the pole-order constraint system), and exact
counts of places of each degree.

Text formats: places print as "[x^2+2]" or "Pinf"; divisors as
"2*Pinf + 1*[x^2+2] - 3*[x+1]".
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf, linalg
from .polyring import Poly, count_irreducibles, gcd, is_irreducible


# ---------------------------------------------------------------------------
# places


class Place:
    """A place of GF(q)(x): a monic irreducible polynomial, or infinity."""

    __slots__ = ("field", "poly", "_hash")

    def __init__(self, field, poly):
        self.field = field
        self.poly = poly
        key = None if poly is None else tuple(c.index for c in poly.coeffs)
        self._hash = hash((field._key, key))

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        if self.poly is None:
            return (0, 0, ())
        return (1, self.poly.degree, tuple(c.index for c in self.poly.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        if self.field is not other.field:
            return False
        if self.poly is None or other.poly is None:
            return self.poly is None and other.poly is None
        return self.poly == other.poly

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Pinf" if self.poly is None else f"[{self.poly}]"


def infinite_place(field) -> Place:
    return Place(field, None)


def finite_place(poly: Poly, check: bool = True) -> Place:
    if not poly.is_monic or poly.degree < 1:
        raise ValueError("a finite place needs a monic polynomial of degree >= 1")
    if check and not is_irreducible(poly):
        raise ValueError(f"{poly} is not irreducible")
    return Place(poly.field, poly)


def parse_place(field, text: str) -> Place:
    text = text.strip()
    if text == "Pinf":
        return infinite_place(field)
    if text.startswith("[") and text.endswith("]"):
        return finite_place(Poly.from_string(field, text[1:-1]))
    raise ValueError(f"bad place text: {text!r}")


# ---------------------------------------------------------------------------
# divisors


class Divisor:
    """Integer formal sum of places; zero coefficients are never stored."""

    __slots__ = ("field", "_coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        self._coeffs = {}
        if coeffs:
            for place, n in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if place.field is not field:
                    raise ValueError("place belongs to a different field")
                if n:
                    m = self._coeffs.get(place, 0) + n
                    if m:
                        self._coeffs[place] = m
                    else:
                        self._coeffs.pop(place, None)

    def __getitem__(self, place: Place) -> int:
        return self._coeffs.get(place, 0)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda pn: pn[0].sort_key())

    def support(self):
        return [p for p, _ in self.items()]

    @property
    def degree(self) -> int:
        return sum(n * p.degree for p, n in self._coeffs.items())

    @property
    def is_effective(self) -> bool:
        return all(n > 0 for n in self._coeffs.values())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other):
        if not isinstance(other, Divisor) or other.field is not self.field:
            return NotImplemented
        out = dict(self._coeffs)
        for p, n in other._coeffs.items():
            m = out.get(p, 0) + n
            if m:
                out[p] = m
            else:
                out.pop(p, None)
        return Divisor(self.field, out)

    def __neg__(self):
        return Divisor(self.field, {p: -n for p, n in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Divisor) or other.field is not self.field:
            return NotImplemented
        return self + (-other)

    def __rmul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Divisor(self.field, {p: k * n for p, n in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.field is other.field and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.field._key,
                     tuple((p, n) for p, n in self.items())))

    def __repr__(self):
        return format_divisor(self)


def divisor_of(place: Place, n: int = 1) -> Divisor:
    return Divisor(place.field, {place: n})


def format_divisor(G: Divisor) -> str:
    if G.is_zero():
        return "0"
    parts = []
    for place, n in G.items():
        if not parts:
            parts.append(f"{n}*{place}" if n >= 0 else f"-{-n}*{place}")
        elif n >= 0:
            parts.append(f"+ {n}*{place}")
        else:
            parts.append(f"- {-n}*{place}")
    return " ".join(parts)


def parse_divisor(field, text: str) -> Divisor:
    """Parse divisor text like "2*Pinf + 1*[x^2+2] - 3*[x+1]"."""
    text = text.strip()
    if text in ("", "0"):
        return Divisor(field)
    # split into signed terms at top level (outside [...])
    terms = []
    depth, start, sign = 0, 0, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            terms.append((sign, text[start:i].strip()))
            sign = 1 if ch == "+" else -1
            start = i + 1
        elif ch == "-" and depth == 0 and i == start:
            sign = -sign
            start = i + 1
        i += 1
    terms.append((sign, text[start:].strip()))
    coeffs: list[tuple[Place, int]] = []
    for sign, term in terms:
        if not term:
            raise ValueError(f"bad divisor text: {text!r}")
        if "*" in term:
            left, right = term.split("*", 1)
            n = sign * int(left.strip())
            place = parse_place(field, right.strip())
        else:
            n = sign
            place = parse_place(field, term)
        coeffs.append((place, n))
    return Divisor(field, coeffs)


def floor_divisor(G: Divisor, q: int) -> Divisor:
    """Positive coefficients floor-divided by q; negative ones unchanged."""
    return Divisor(G.field, {p: (n // q if n > 0 else n)
                             for p, n in G._coeffs.items()})


def positive_part(G: Divisor) -> Divisor:
    """The positive-coefficient part of G."""
    return Divisor(G.field, {p: n for p, n in G._coeffs.items() if n > 0})


def positive_support_divisor(G: Divisor) -> Divisor:
    """Each positive coefficient of G replaced by 1."""
    return Divisor(G.field, {p: 1 for p, n in G._coeffs.items() if n > 0})


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """num/den over GF(q)[x], stored reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RationalFunction):
            if den is not None:
                raise ValueError("cannot give a denominator with a function")
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, Poly):
            raise ValueError("numerator must be a polynomial")
        field = num.field
        if den is None:
            den = Poly.one(field)
        elif isinstance(den, (int, gf.FieldElem)):
            den = Poly.constant(field, den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = Poly.zero(field), Poly.one(field)
            return
        g = gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        inv = den.lc.inverse()
        self.num = num * inv
        self.den = den * inv

    @property
    def field(self):
        return self.num.field

    @classmethod
    def constant(cls, field, c):
        return cls(Poly.constant(field, c))

    @classmethod
    def x(cls, field):
        return cls(Poly.x(field))

    @property
    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> gf.FieldElem:
        if not self.is_constant:
            raise ValueError("not a constant function")
        return self.num[0]

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field is not self.field:
                raise ValueError("functions over different fields")
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, (int, gf.FieldElem)):
            return RationalFunction.constant(self.field, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

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
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return RationalFunction(self.num ** e, self.den ** e)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def __repr__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------------
# valuations and evaluation


def _multiplicity(f: Poly, pi: Poly) -> int:
    count = 0
    while f.degree >= pi.degree:
        q, r = divmod(f, pi)
        if r:
            break
        f = q
        count += 1
    return count


def valuation(f: RationalFunction, place: Place) -> int:
    """Order of vanishing of f at the place (negative at a pole)."""
    if not f:
        raise ValueError("the zero function has no valuation")
    if place.is_infinite:
        return f.den.degree - f.num.degree
    return (_multiplicity(f.num, place.poly)
            - _multiplicity(f.den, place.poly))


_RESIDUE_CACHE: dict[tuple, gf.FieldDescriptor] = {}


def residue_field(place: Place) -> gf.FieldDescriptor:
    """The residue field GF(q)[x]/(pi) as a tower level over GF(q)."""
    if place.is_infinite:
        return place.field
    key = (place.field._key, tuple(c.index for c in place.poly.coeffs))
    desc = _RESIDUE_CACHE.get(key)
    if desc is None:
        desc = place.field.extend(modulus=place.poly.coeffs, check=False)
        _RESIDUE_CACHE[key] = desc
    return desc


def evaluate(f: RationalFunction, place: Place) -> gf.FieldElem:
    """Residue class of f at the place (an element of the residue field).

    Requires valuation(f, place) >= 0; at infinity the value is the ratio of
    leading coefficients (or 0 when the valuation is positive).
    """
    field = f.field
    if place.is_infinite:
        if not f:
            return field.zero()
        v = f.den.degree - f.num.degree
        if v < 0:
            raise ValueError(f"pole at place {place}")
        if v > 0:
            return field.zero()
        return f.num.lc / f.den.lc
    pi = place.poly
    if not (f.den % pi):
        raise ValueError(f"pole at place {place}")
    if pi.degree == 1:
        root = -pi[0]
        return f.num(root) / f.den(root)
    res = residue_field(place)
    num_r = res.elem((f.num % pi).coeffs)
    den_r = res.elem((f.den % pi).coeffs)
    return num_r / den_r


# ---------------------------------------------------------------------------
# Riemann-Roch spaces (genus 0)


@dataclass(frozen=True)
class RRSpace:
    """A Riemann-Roch space L(G) with an explicit basis."""

    divisor: Divisor
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _den_and_caps(G: Divisor):
    field = G.field
    den = Poly.one(field)
    forced = Poly.one(field)
    for place, n in G.items():
        if place.is_infinite:
            continue
        if n > 0:
            den = den * place.poly ** n
        else:
            forced = forced * place.poly ** (-n)
    return den, forced, G[infinite_place(field)]


def rr_basis(G: Divisor) -> RRSpace:
    """Basis of L(G) = {f : (f) + G >= 0}.

    Candidate numerators x^j over the explicit denominator are filtered by
    the linear constraint system forcing the required zeros; on GF(q)(x)
    the dimension always comes out as deg G + 1 (deg G >= 0).
    """
    field = G.field
    if G.degree < 0:
        return RRSpace(G, ())
    den, forced, ninf = _den_and_caps(G)
    jmax = den.degree + ninf
    dz = forced.degree
    if dz == 0:
        numerators = [Poly.monomial(field, j) for j in range(jmax + 1)]
    else:
        rows = [[field.zero()] * (jmax + 1) for _ in range(dz)]
        for j in range(jmax + 1):
            rem = Poly.monomial(field, j) % forced
            for t in range(dz):
                rows[t][j] = rem[t]
        kernel = linalg.right_kernel(rows, jmax + 1, field)
        numerators = [Poly(field, v) for v in kernel]
    basis = tuple(RationalFunction(nm, den) for nm in numerators)
    space = RRSpace(G, basis)
    if space.dimension != G.degree + 1:
        raise RuntimeError("Riemann-Roch dimension mismatch (internal error)")
    for f in basis:
        for place in list(G.support()) + [infinite_place(field)]:
            if valuation(f, place) < -G[place]:
                raise RuntimeError("basis element violates (f) + G >= 0")
    return space


def rr_dim(G: Divisor) -> int:
    """l(G) on a genus-0 field: deg G + 1 when deg G >= 0, else 0."""
    return max(G.degree + 1, 0)


def is_in_rr_space(f: RationalFunction, G: Divisor) -> bool:
    """Membership test f in L(G), without factoring anything."""
    if not f:
        return True
    den, forced, ninf = _den_and_caps(G)
    q, r = divmod(den, f.den)
    if r:
        return False
    t = f.num * q
    if t.degree > den.degree + ninf:
        return False
    return not (t % forced) if forced.degree > 0 else True


# ---------------------------------------------------------------------------
# place counts


def count_places(q, r: int) -> int:
    """B_r for GF(q)(x): monic irreducibles of degree r, plus infinity when
    r = 1.  Accepts a field descriptor or the order q."""
    order = q.order if isinstance(q, gf.FieldDescriptor) else q
    if r < 1:
        raise ValueError("place degree must be >= 1")
    return count_irreducibles(r, order) + (1 if r == 1 else 0)
