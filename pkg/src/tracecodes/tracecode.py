"""Construction of trace codes from places of arbitrary degree.

Given distinct finite places P_1..P_n of GF(q)(x) and a divisor G with
support disjoint from them, the code is the image of L(G) under

    f  |->  (Tr_1(f(P_1)), ..., Tr_n(f(P_n)))

where Tr_i is the trace of the residue field at P_i down to GF(q).  This
module builds the generator matrix and the kernel of the evaluation map,
produces the quasi-cyclic family obtained from the shift-orbit grid of all
degree-d irreducibles over GF(p), and decides degeneracy (membership in
{gamma + alpha*(h^p - h)}) by linear algebra over GF(p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gf, linalg
from .funcfield import (Divisor, Place, RRSpace, RationalFunction, divisor_of,
                        evaluate, finite_place, infinite_place, is_in_rr_space,
                        positive_part, rr_basis)
from .polyring import Poly, monic_irreducibles, count_irreducibles_trace, \
    poly_trace, shifted


# ---------------------------------------------------------------------------
# code specification


class CodeSpec:
    """Validated input data (q, D, G) for one trace code."""

    __slots__ = ("field", "places", "divisor", "allow_wild_degrees")

    def __init__(self, field, places, divisor, allow_wild_degrees=False):
        self.field = field
        self.places = tuple(places)
        self.divisor = divisor
        self.allow_wild_degrees = allow_wild_degrees
        self._validate()

    def _validate(self):
        if not self.places:
            raise ValueError("D must contain at least one place")
        p = self.field.characteristic
        seen = set()
        for place in self.places:
            if place.field is not self.field:
                raise ValueError("place belongs to a different field")
            if place.is_infinite:
                raise ValueError("the infinite place cannot appear in D")
            if place in seen:
                raise ValueError(f"duplicate place {place} in D")
            seen.add(place)
            if not self.allow_wild_degrees and math.gcd(place.degree, p) != 1:
                raise ValueError(
                    f"place {place} has degree {place.degree} not coprime to "
                    f"the characteristic p={p}; required (beta, p) = 1 "
                    "(set allow_wild_degrees to override)")
        if self.divisor.field is not self.field:
            raise ValueError("divisor belongs to a different field")
        for place in self.divisor.support():
            if place in seen:
                raise ValueError("supp(G) ∩ supp(D) ≠ ∅")

    @property
    def n(self) -> int:
        return len(self.places)

    @property
    def beta_profile(self) -> tuple[int, ...]:
        return tuple(place.degree for place in self.places)

    def distinct_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.beta_profile)))


# ---------------------------------------------------------------------------
# evaluation and codewords


def _trace_entry(value: gf.FieldElem, place: Place, field) -> gf.FieldElem:
    if value.field is field:
        return value
    traced = gf.trace_to_subfield(value, place.degree, field.order)
    return gf.to_base_field(traced)


def evaluation_vector(f: RationalFunction, spec: CodeSpec) -> tuple:
    """(f(P_1), ..., f(P_n)) with entries in the residue fields."""
    return tuple(evaluate(f, place) for place in spec.places)


def codeword(f: RationalFunction, spec: CodeSpec) -> tuple:
    """Trace-evaluation codeword of f over GF(q)."""
    return tuple(_trace_entry(evaluate(f, place), place, spec.field)
                 for place in spec.places)


class TraceCode:
    """A built trace code: generator rows, rank, and the kernel of the map."""

    __slots__ = ("spec", "rr_space", "rows", "n", "k", "kernel_basis")

    def __init__(self, spec, rr_space, rows, k, kernel_basis):
        self.spec = spec
        self.rr_space = rr_space
        self.rows = rows
        self.n = spec.n
        self.k = k
        self.kernel_basis = kernel_basis

    @property
    def field(self):
        return self.spec.field

    @property
    def beta_profile(self):
        return self.spec.beta_profile

    def codeword(self, f: RationalFunction) -> tuple:
        return codeword(f, self.spec)

    def __repr__(self):
        return (f"TraceCode(n={self.n}, k={self.k}, "
                f"q={self.field.order}, G={self.spec.divisor})")


def build(spec: CodeSpec) -> TraceCode:
    """Evaluate an L(G) basis at D, apply per-place traces, take the span."""
    rr = rr_basis(spec.divisor)
    rows = tuple(codeword(f, spec) for f in rr.basis)
    field = spec.field
    k = linalg.rank(rows, spec.n, field)
    kernel = []
    if rr.basis:
        for combo in linalg.left_kernel(rows, spec.n, field):
            f = RationalFunction.constant(field, 0)
            for c, b in zip(combo, rr.basis):
                if c:
                    f = f + c * b
            kernel.append(f)
    if len(kernel) + k != rr.dimension:
        raise RuntimeError("rank/kernel dimensions do not add up (internal)")
    return TraceCode(spec, rr, rows, k, tuple(kernel))


def goppa_rows(field, places, G: Divisor) -> tuple:
    """Generator rows of the plain evaluation code (x(P_1), ..., x(P_n)) for
    degree-one places; the classical construction used as a cross-check."""
    for place in places:
        if place.degree != 1:
            raise ValueError("the evaluation code needs degree-one places")
    spec = CodeSpec(field, places, G)
    rr = rr_basis(G)
    return tuple(tuple(evaluate(f, place) for place in spec.places)
                 for f in rr.basis)


# ---------------------------------------------------------------------------
# degeneracy (f = gamma + alpha*(h^p - h))


def _pole_ceiling_divisor(G: Divisor, p: int) -> Divisor:
    """Divisor with ceil(n_P / p) at each positive coefficient of G; this
    bounds the poles of any h with h^p - h in L(G)."""
    return Divisor(G.field, {place: -(-n // p)
                             for place, n in G.items() if n > 0})


def _ambient(G: Divisor):
    """Ambient polynomial model for L(p*G'), G' the pole-ceiling divisor."""
    field = G.field
    p = field.characteristic
    gp = _pole_ceiling_divisor(G, p)
    den = Poly.one(field)
    cap_inf = 0
    for place, n in gp.items():
        if place.is_infinite:
            cap_inf = p * n
        else:
            den = den * place.poly ** (p * n)
    return den, den.degree + cap_inf


def _ambient_coords(f: RationalFunction, den: Poly, cap: int):
    """Coefficient coordinates of f inside the ambient model, or None."""
    field = den.field
    if not f:
        return [field.zero()] * (cap + 1)
    q, r = divmod(den, f.den)
    if r:
        return None
    t = f.num * q
    if t.degree > cap:
        return None
    return [t[i] for i in range(cap + 1)]


def _flatten(vec, prime):
    out = []
    for c in vec:
        out.extend(prime.elem(v) for v in gf.prime_coordinates(c))
    return out


def _degeneracy_parts(G: Divisor):
    """Constant rows and h^p - h image rows in flattened ambient coordinates.

    Images are returned unscaled (as GF(q) coordinate vectors); the caller
    scales them by each alpha before flattening.
    """
    field = G.field
    p = field.characteristic
    den, cap = _ambient(G)
    gp = _pole_ceiling_divisor(G, p)
    h_space = rr_basis(gp)
    basis_fq = gf.prime_basis(field)
    const_vecs = []
    for e in basis_fq:
        vec = _ambient_coords(RationalFunction.constant(field, e), den, cap)
        const_vecs.append(vec)
    image_vecs = []
    for h in h_space.basis:
        for e in basis_fq:
            eh = e * h
            img = eh ** p - eh
            vec = _ambient_coords(img, den, cap)
            if vec is None:
                raise RuntimeError("image escapes the ambient model (internal)")
            image_vecs.append(vec)
    return den, cap, const_vecs, image_vecs


def is_degenerate(f: RationalFunction, G: Divisor) -> bool:
    """True iff f = gamma + alpha*(h^p - h) for some gamma in GF(q),
    alpha in GF(q)*, h in GF(q)(x).

    Solved, for each of the q - 1 values of alpha, as a GF(p)-linear
    membership problem; pole bookkeeping confines h to a finite search
    space L(G') with ceil(n_P/p) pole orders.
    """
    if not is_in_rr_space(f, G):
        raise ValueError("f is not a member of L(G)")
    if f.is_constant:
        return True
    field = G.field
    prime = field.prime_subfield()
    den, cap, const_vecs, image_vecs = _degeneracy_parts(G)
    fvec = _ambient_coords(f, den, cap)
    if fvec is None:
        raise RuntimeError("member of L(G) escapes the ambient model")
    fflat = _flatten(fvec, prime)
    width = len(fflat)
    for alpha in field.elements():
        if not alpha:
            continue
        rows = [_flatten(v, prime) for v in const_vecs]
        rows += [_flatten([alpha * c for c in v], prime) for v in image_vecs]
        red, piv = linalg.rref(rows, width, prime)
        if linalg.in_row_space(red, piv, fflat):
            return True
    return False


def space_nondegenerate(G: Divisor) -> bool:
    """True iff L(G) contains a non-constant element and no non-constant
    member of L(G) is degenerate.

    Rather than testing the q^l members one at a time, the set of
    degenerate elements inside L(G) is computed per alpha as a subspace
    intersection; degeneracy is scalar-invariant, so the two views agree.
    """
    field = G.field
    prime = field.prime_subfield()
    rr = rr_basis(G)
    if not any(not b.is_constant for b in rr.basis):
        return False
    den, cap, const_vecs, image_vecs = _degeneracy_parts(G)
    basis_fq = gf.prime_basis(field)
    space_rows = []
    for b in rr.basis:
        for e in basis_fq:
            vec = _ambient_coords(e * b, den, cap)
            if vec is None:
                raise RuntimeError("member of L(G) escapes the ambient model")
            space_rows.append(_flatten(vec, prime))
    width = len(space_rows[0])
    const_rows = [_flatten(v, prime) for v in const_vecs]
    const_red, const_piv = linalg.rref(const_rows, width, prime)
    for alpha in field.elements():
        if not alpha:
            continue
        w_rows = const_rows + [
            _flatten([alpha * c for c in v], prime) for v in image_vecs]
        meet = linalg.intersect_row_spaces(w_rows, space_rows, width, prime)
        for vec in meet:
            if not linalg.in_row_space(const_red, const_piv, vec):
                return False
    return True


# ---------------------------------------------------------------------------
# quasi-cyclic family from the shift-orbit grid


@dataclass(frozen=True)
class QCGrid:
    """p x m grid of degree-d places; each row is the x -> x + alpha image
    of the previous one, starting from the trace-coefficient-0 row."""

    p: int
    d: int
    alpha: gf.FieldElem
    m: int
    rows: tuple

    @property
    def places(self) -> tuple:
        return tuple(place for row in self.rows for place in row)

    def polynomial_rows(self):
        return tuple(tuple(place.poly for place in row) for row in self.rows)


def quasi_cyclic_family(p: int, d: int, r: int):
    """The length p*m code from all degree-d irreducibles over GF(p) with
    G = r * Pinf, plus its grid.  Requires gcd(d, p) = 1."""
    field = gf.GF(p)
    if field.order != p:
        raise ValueError("the quasi-cyclic family is defined over a prime field")
    if math.gcd(d, p) != 1:
        raise ValueError("(d, p) = 1 violated: the grid construction needs "
                         "d coprime to p")
    if r < 0:
        raise ValueError("r must be >= 0")
    alpha = field.elem(pow(d, -1, p))
    row0 = [f for f in monic_irreducibles(d, field) if not poly_trace(f)]
    m = count_irreducibles_trace(d, p, 0)
    if len(row0) != m:
        raise RuntimeError("trace-zero count does not match the formula")
    poly_rows = [row0]
    for _ in range(p - 1):
        poly_rows.append([shifted(f, alpha) for f in poly_rows[-1]])
    place_rows = tuple(tuple(finite_place(f, check=False) for f in row)
                       for row in poly_rows)
    grid = QCGrid(p=p, d=d, alpha=alpha, m=m, rows=place_rows)
    G = divisor_of(infinite_place(field), r) if r else Divisor(field)
    spec = CodeSpec(field, grid.places, G)
    return grid, build(spec)


def shift_by_rows(vec, m: int):
    """Cyclic shift of a codeword by m positions (one grid row)."""
    vec = tuple(vec)
    if m < 1 or len(vec) % m != 0:
        raise ValueError("vector length must be a positive multiple of m")
    return vec[m:] + vec[:m]
