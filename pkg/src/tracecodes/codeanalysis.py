"""Exact analysis of linear codes over GF(q) and mixed-alphabet codes.

Minimum distance and weight distribution come from full message-space
enumeration (with a 10^7-codeword guard and optional partitioned workers),
quasi-cyclic structure from shift-membership tests on divisor shift amounts,
and the mixed-alphabet machinery (coordinate-wise trace, the trace-bilinear
dual, subfield restriction, duality verification) from plain rank/kernel
problems after flattening each coordinate field to its GF(q) power basis.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from . import gf, linalg
from ._numutil import divisors, ilog

_ENUMERATION_GUARD = 10_000_000


# ---------------------------------------------------------------------------
# plain linear codes


class LinearCode:
    """Row space of a generator matrix over one field."""

    __slots__ = ("field", "n", "rows", "_reduced")

    def __init__(self, field, rows, n=None):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        if n is None:
            if not self.rows:
                raise ValueError("give n explicitly for a code with no rows")
            n = len(self.rows[0])
        for r in self.rows:
            if len(r) != n:
                raise ValueError("generator rows have unequal lengths")
        self.n = n
        self._reduced = None

    @property
    def reduced(self):
        if self._reduced is None:
            self._reduced = linalg.rref(self.rows, self.n, self.field)
        return self._reduced

    @property
    def k(self) -> int:
        return len(self.reduced[0])

    def contains(self, vec) -> bool:
        red, piv = self.reduced
        return linalg.in_row_space(red, piv, list(vec))

    def row_space_equal(self, other: "LinearCode") -> bool:
        return self.n == other.n and self.reduced[0] == other.reduced[0]

    def dual(self) -> "LinearCode":
        kernel = linalg.right_kernel(self.reduced[0], self.n, self.field)
        return LinearCode(self.field, kernel, self.n)

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, q={self.field.order})"


# ---------------------------------------------------------------------------
# weight enumeration

_TABLE_CACHE: dict = {}


def _tables(field):
    tables = _TABLE_CACHE.get(field._key)
    if tables is None:
        q = field.order
        elems = list(field.elements())
        add = [[(a + b).index for b in elems] for a in elems]
        mul = [[(a * b).index for b in elems] for a in elems]
        _TABLE_CACHE[field._key] = tables = (add, mul)
    return tables


def _weights_chunk(scaled, n, add, prefix):
    """Weight histogram over span(rows) restricted to the given leading
    message digits."""
    hist: Counter = Counter()
    acc0 = [0] * n
    for digit, row_choices in zip(prefix, scaled):
        row = row_choices[digit]
        acc0 = [add[a][b] for a, b in zip(acc0, row)]
    rest = scaled[len(prefix):]

    def rec(level, acc):
        if level == len(rest):
            hist[sum(1 for v in acc if v)] += 1
            return
        choices = rest[level]
        rec(level + 1, acc)  # digit 0 leaves the partial sum unchanged
        for digit in range(1, len(choices)):
            row = choices[digit]
            rec(level + 1, [add[a][b] for a, b in zip(acc, row)])

    rec(0, acc0)
    return hist


def weight_distribution(code: LinearCode, workers: int = 1) -> dict[int, int]:
    """Exact weight histogram by enumerating all q^k codewords."""
    red, _ = code.reduced
    k = len(red)
    q = code.field.order
    if q ** k > _ENUMERATION_GUARD:
        raise ValueError("enumeration guard exceeded (q^k > 10^7)")
    if k == 0:
        return {0: 1}
    add, mul = _tables(code.field)
    scaled = [[[mul[c][v.index] for v in row] for c in range(q)] for row in red]
    if workers <= 1 or k == 1:
        hist = _weights_chunk(scaled, code.n, add, ())
    else:
        hist = Counter()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            jobs = [pool.submit(_weights_chunk, scaled, code.n, add, (c,))
                    for c in range(q)]
            for job in jobs:
                hist.update(job.result())
    return dict(sorted(hist.items()))


def min_distance(code: LinearCode, workers: int = 1) -> int:
    """Exact minimum distance (code must have k >= 1)."""
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    dist = weight_distribution(code, workers=workers)
    return min(w for w in dist if w > 0)


def _cyclic_shift(vec, l):
    return tuple(vec[l:]) + tuple(vec[:l])


def quasicyclic_index(code: LinearCode) -> tuple[int, ...]:
    """All divisors l of n such that shifting by l preserves the code."""
    if code.k == 0:
        return tuple(divisors(code.n))
    out = []
    for l in divisors(code.n):
        if all(code.contains(_cyclic_shift(row, l)) for row in code.rows):
            out.append(l)
    return tuple(out)


@dataclass(frozen=True)
class CodeAnalysis:
    n: int
    k: int
    d: int | None
    weight_distribution: dict
    qc_indices: tuple
    singleton_defect: int | None

    def to_json_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "weight_distribution": {str(w): c for w, c in
                                    sorted(self.weight_distribution.items())},
            "qc_indices": list(self.qc_indices),
            "singleton_defect": self.singleton_defect,
        }


def analyze(field, rows, n=None, workers: int = 1) -> CodeAnalysis:
    """Full exact analysis of the span of the given generator rows."""
    code = LinearCode(field, rows, n)
    dist = weight_distribution(code, workers=workers)
    k = code.k
    d = min((w for w in dist if w > 0), default=None)
    defect = code.n - k + 1 - d if d is not None else None
    return CodeAnalysis(n=code.n, k=k, d=d, weight_distribution=dist,
                        qc_indices=quasicyclic_index(code),
                        singleton_defect=defect)


# ---------------------------------------------------------------------------
# mixed-alphabet codes C ⊆ Π GF(q^beta_i)


class MixedCode:
    """A GF(q)-subspace of a product of extension fields, held flat.

    Each coordinate i is an extension of the base field (the base field
    itself for beta_i = 1); vectors are stored as GF(q) rows of width
    sum(beta_i) via the per-coordinate power bases.
    """

    __slots__ = ("field", "coord_fields", "rows", "offsets", "width", "_reduced")

    def __init__(self, field, coord_fields, rows):
        self.field = field
        self.coord_fields = tuple(coord_fields)
        for cf in self.coord_fields:
            if cf is not field and cf.base is not field:
                raise ValueError("coordinate fields must be the base field or "
                                 "one extension level above it")
        offsets = []
        width = 0
        for cf in self.coord_fields:
            offsets.append(width)
            width += 1 if cf is field else cf.degree
        self.offsets = tuple(offsets)
        self.width = width
        self.rows = tuple(tuple(r) for r in rows)
        for r in self.rows:
            if len(r) != width:
                raise ValueError("flattened row width mismatch")
        self._reduced = None

    @property
    def n(self) -> int:
        return len(self.coord_fields)

    @property
    def beta(self) -> tuple[int, ...]:
        return tuple(1 if cf is self.field else cf.degree
                     for cf in self.coord_fields)

    @property
    def reduced(self):
        if self._reduced is None:
            self._reduced = linalg.rref(self.rows, self.width, self.field)
        return self._reduced

    @property
    def k(self) -> int:
        return len(self.reduced[0])

    @classmethod
    def from_coordinate_vectors(cls, field, coord_fields, vectors):
        rows = [cls._flatten(field, coord_fields, v) for v in vectors]
        return cls(field, coord_fields, rows)

    @staticmethod
    def _flatten(field, coord_fields, vector):
        out = []
        for cf, e in zip(coord_fields, vector):
            if e.field is not cf:
                raise ValueError("coordinate lies in the wrong field")
            if cf is field:
                out.append(e)
            else:
                out.extend(e.coeffs)
        return tuple(out)

    def unflatten(self, row):
        out = []
        for cf, off in zip(self.coord_fields, self.offsets):
            if cf is self.field:
                out.append(row[off])
            else:
                out.append(cf.elem(row[off:off + cf.degree]))
        return tuple(out)

    def coordinate_vectors(self):
        return [self.unflatten(r) for r in self.rows]

    def row_space_equal(self, other: "MixedCode") -> bool:
        return (self.width == other.width
                and self.reduced[0] == other.reduced[0])

    def __repr__(self):
        return (f"MixedCode(n={self.n}, beta={self.beta}, "
                f"k={self.k}, q={self.field.order})")


def sigma(vector, field) -> tuple:
    """Coordinate-wise trace down to the base field."""
    out = []
    for e in vector:
        if e.field is field:
            out.append(e)
            continue
        beta = ilog(field.order, e.field.order)
        if beta is None or e.field.base is not field:
            raise ValueError("coordinate does not match the beta profile")
        out.append(gf.to_base_field(gf.trace_to_subfield(e, beta, field.order)))
    return tuple(out)


def sigma_image(C: MixedCode) -> LinearCode:
    rows = [sigma(v, C.field) for v in C.coordinate_vectors()]
    return LinearCode(C.field, rows, C.n)


def _gram_blocks(C: MixedCode):
    """Per-coordinate matrices of (u, v) -> Tr(u*v) on the power basis."""
    blocks = []
    q = C.field.order
    for cf in C.coord_fields:
        if cf is C.field or cf.degree == 1:
            blocks.append([[C.field.one()]])
            continue
        beta = cf.degree
        g = cf.generator()
        powers = [cf.one()]
        for _ in range(2 * beta - 2):
            powers.append(powers[-1] * g)
        traces = [gf.to_base_field(gf.trace_to_subfield(w, beta, q))
                  for w in powers]
        blocks.append([[traces[a + b] for b in range(beta)]
                       for a in range(beta)])
    return blocks


def trace_dual(C: MixedCode) -> MixedCode:
    """Orthogonal complement under <u, v> = sum_i Tr_i(u_i v_i)."""
    blocks = _gram_blocks(C)
    mb_rows = []
    for row in C.reduced[0]:
        out = []
        for cf, off, block in zip(C.coord_fields, C.offsets, blocks):
            beta = len(block)
            seg = row[off:off + beta]
            for b in range(beta):
                acc = C.field.zero()
                for a in range(beta):
                    if seg[a]:
                        acc = acc + seg[a] * block[a][b]
                out.append(acc)
        mb_rows.append(out)
    kernel = linalg.right_kernel(mb_rows, C.width, C.field)
    return MixedCode(C.field, C.coord_fields, kernel)


def restrict_subfield(C: MixedCode) -> LinearCode:
    """Members of C whose every coordinate lies in GF(q), read in GF(q)^n."""
    field = C.field
    zero, one = field.zero(), field.one()
    constraint_rows = []
    for off in C.offsets:
        v = [zero] * C.width
        v[off] = one
        constraint_rows.append(v)
    meet = linalg.intersect_row_spaces(C.rows, constraint_rows, C.width, field)
    projected = [tuple(v[off] for off in C.offsets) for v in meet]
    return LinearCode(field, projected, C.n)


@dataclass(frozen=True)
class DelsarteCheck:
    duality_equal: bool
    corollary_holds: bool
    dim_code: int
    dim_sigma_image: int
    dim_restriction: int
    dim_trace_dual: int


def check_delsarte(C: MixedCode) -> DelsarteCheck:
    """Compare (C|_GF(q))^perp with sigma(C^perp_tr) as explicit subspaces,
    and check dim sigma(C) >= n - sum(beta) + dim C."""
    if C.width > 14:
        raise ValueError("flattened dimension guard (sum beta <= 14) exceeded")
    dual = trace_dual(C)
    lhs = restrict_subfield(C).dual()
    rhs = sigma_image(dual)
    im = sigma_image(C)
    return DelsarteCheck(
        duality_equal=lhs.row_space_equal(rhs),
        corollary_holds=im.k >= C.n - C.width + C.k,
        dim_code=C.k,
        dim_sigma_image=im.k,
        dim_restriction=restrict_subfield(C).k,
        dim_trace_dual=dual.k,
    )


# ---------------------------------------------------------------------------
# support partitions


@dataclass(frozen=True)
class SupportPartition:
    """Places split by whether the traced evaluation of f vanishes."""

    nonzero: tuple
    zero: tuple

    @property
    def weight(self) -> int:
        return len(self.nonzero)


def support_partition(f, code) -> SupportPartition:
    """Partition supp(D) into N (nonzero traced value) and Z for one f."""
    word = code.codeword(f)
    places = code.spec.places
    nonzero = tuple(p for p, v in zip(places, word) if v)
    zero = tuple(p for p, v in zip(places, word) if not v)
    return SupportPartition(nonzero=nonzero, zero=zero)
