"""Exact arithmetic in finite fields presented as explicit extension towers.

A field is described by a :class:`FieldDescriptor`: the prime characteristic
p together with an ordered tower of monic irreducible moduli, each one a
polynomial over the field defined by the levels below it.  GF(p) is the empty
tower, GF(p**s) is one level of degree s, and the residue field of a
degree-beta place sits one more level up.  Elements carry a coefficient
vector over the previous level (trailing zeros retained), so every operation
bottoms out in integer arithmetic mod p and stays exact.

Extensions are always built as quotients by an explicit monic irreducible;
no discrete-log tables are kept.  When the caller supplies only a degree,
the lexicographically smallest monic irreducible of that degree is used,
which makes towers reproducible across runs.  Elements print as polynomial
expressions in per-level generator names "t0", "t1", ...

Field spec text format: "p^s" with an optional ";modulus=..." part, e.g.
"5^2;modulus=t^2+2".  Inside a field spec the modulus variable is written
"t"; parsers also accept the level name ("t0" for the first extension).
"""

from __future__ import annotations

import re

from . import linalg
from ._numutil import ilog, is_prime, prime_factors, prime_power

_FIELDS: dict[tuple, "FieldDescriptor"] = {}


# ---------------------------------------------------------------------------
# descriptors


class FieldDescriptor:
    """A finite field as a tower of quotient extensions over GF(p).

    Immutable and interned: building the same tower twice returns the same
    object, so descriptors can be compared by identity and shared freely
    across threads.
    """

    __slots__ = ("characteristic", "base", "modulus", "degree", "order",
                 "level", "_key", "_zero", "_one", "_irr_cache")

    def __init__(self, characteristic, base, modulus, key):
        self.characteristic = characteristic
        self.base = base
        self.modulus = modulus          # tuple of base elements, monic, or None
        self.degree = 1 if base is None else len(modulus) - 1
        self.order = characteristic if base is None else base.order ** self.degree
        self.level = 0 if base is None else base.level + 1
        self._key = key
        self._zero = None
        self._one = None
        self._irr_cache = {}

    # -- construction ------------------------------------------------------

    def extend(self, degree=None, modulus=None, check=True) -> "FieldDescriptor":
        """Quotient extension of this field by a monic irreducible modulus.

        Give either the modulus (text, coefficient sequence low-to-high, or
        anything with a ``coeffs`` attribute) or a degree, in which case the
        lexicographically smallest monic irreducible of that degree is used.
        """
        if modulus is None:
            if degree is None or degree < 1:
                raise ValueError("extend needs a modulus or a degree >= 1")
            mod = self._smallest_irreducible(degree)
            check = False
        else:
            mod = getattr(modulus, "coeffs", modulus)
            if isinstance(mod, str):
                mod = parse_poly_coeffs(self, mod, {"t", f"t{self.level}"})
            mod = _vtrim(tuple(self.elem(c) for c in mod))
            if len(mod) < 2:
                raise ValueError("modulus must have degree >= 1")
            if mod[-1] != self.one():
                raise ValueError("modulus must be monic")
            if degree is not None and len(mod) - 1 != degree:
                raise ValueError("modulus degree does not match requested degree")
        if check and len(mod) > 2 and not _vec_is_irreducible(mod, self):
            raise ValueError("modulus is not irreducible over its base level")
        key = (self._key, tuple(c.index for c in mod))
        cached = _FIELDS.get(key)
        if cached is None:
            cached = _FIELDS[key] = FieldDescriptor(self.characteristic, self, mod, key)
        return cached

    def _smallest_irreducible(self, degree):
        cached = self._irr_cache.get(degree)
        if cached is not None:
            return cached
        one = self.one()
        if degree == 1:
            mod = (self.zero(), one)
        else:
            mod = None
            for idx in range(self.order ** degree):
                coeffs = []
                t = idx
                for _ in range(degree):
                    t, r = divmod(t, self.order)
                    coeffs.append(self.from_index(r))
                # enumeration index runs the constant term fastest, i.e.
                # lexicographic on (c_{d-1}, ..., c_0)
                cand = _vtrim(tuple(coeffs) + (one,))
                if _vec_is_irreducible(cand, self):
                    mod = cand
                    break
            if mod is None:  # cannot happen: irreducibles exist in every degree
                raise RuntimeError("no irreducible polynomial found")
        self._irr_cache[degree] = mod
        return mod

    # -- properties ----------------------------------------------------------

    @property
    def is_prime_field(self) -> bool:
        return self.base is None

    @property
    def dim_over_prime(self) -> int:
        d, desc = 1, self
        while desc.base is not None:
            d *= desc.degree
            desc = desc.base
        return d

    def prime_subfield(self) -> "FieldDescriptor":
        desc = self
        while desc.base is not None:
            desc = desc.base
        return desc

    def tower_chain(self):
        """Descriptors from the prime field up to this one."""
        chain = []
        desc = self
        while desc is not None:
            chain.append(desc)
            desc = desc.base
        return chain[::-1]

    def generator(self) -> "FieldElem":
        """The adjoined root of the top-level modulus."""
        if self.base is None:
            raise ValueError("a prime field has no tower generator")
        if self.degree == 1:
            return FieldElem(self, (-self.modulus[0],))
        return self.from_index(self.base.order)

    # -- elements ------------------------------------------------------------

    def zero(self) -> "FieldElem":
        if self._zero is None:
            if self.base is None:
                self._zero = FieldElem(self, 0)
            else:
                self._zero = FieldElem(self, (self.base.zero(),) * self.degree)
        return self._zero

    def one(self) -> "FieldElem":
        if self._one is None:
            if self.base is None:
                self._one = FieldElem(self, 1 % self.characteristic)
            else:
                self._one = FieldElem(self, (self.base.one(),)
                                      + (self.base.zero(),) * (self.degree - 1))
        return self._one

    def elem(self, value) -> "FieldElem":
        """Coerce an integer (ring hom), coefficient sequence, or element."""
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.base is None:
                return FieldElem(self, value % self.characteristic)
            return FieldElem(self, (self.base.elem(value),)
                             + (self.base.zero(),) * (self.degree - 1))
        if isinstance(value, str):
            return parse_element(self, value)
        coeffs = tuple(self.base.elem(c) if self.base is not None else c
                       for c in value)
        if self.base is None:
            raise ValueError("prime field elements are integers")
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than extension degree")
        coeffs = coeffs + (self.base.zero(),) * (self.degree - len(coeffs))
        return FieldElem(self, coeffs)

    def from_index(self, i: int) -> "FieldElem":
        """Element number i in the lexicographic enumeration order."""
        if not 0 <= i < self.order:
            raise ValueError("element index out of range")
        if self.base is None:
            return FieldElem(self, i)
        coeffs = []
        for _ in range(self.degree):
            i, r = divmod(i, self.base.order)
            coeffs.append(self.base.from_index(r))
        return FieldElem(self, tuple(coeffs))

    def elements(self):
        """All field elements exactly once, in index order."""
        for i in range(self.order):
            yield self.from_index(i)

    def __iter__(self):
        return self.elements()

    # -- misc ---------------------------------------------------------------

    def spec_string(self) -> str:
        if self.level == 0:
            return str(self.characteristic)
        if self.level == 1:
            mod = format_polynomial(self.modulus, "t")
            return f"{self.characteristic}^{self.degree};modulus={mod}"
        raise ValueError("field spec text covers at most one extension level")

    def __repr__(self):
        return f"GF({self.order})"

    def __hash__(self):
        return hash(self._key)


def _prime_field(p: int) -> FieldDescriptor:
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    key = ("p", p)
    cached = _FIELDS.get(key)
    if cached is None:
        cached = _FIELDS[key] = FieldDescriptor(p, None, None, key)
    return cached


def GF(order: int, modulus=None) -> FieldDescriptor:
    """The finite field with the given prime-power order.

    Non-prime orders are built as a single extension of the prime field,
    by the given modulus or the default (lexicographically smallest) one.
    """
    pp = prime_power(order)
    if pp is None:
        raise ValueError(f"{order} is not a prime power")
    p, s = pp
    prime = _prime_field(p)
    if s == 1:
        if modulus is not None:
            raise ValueError("a prime field takes no modulus")
        return prime
    return prime.extend(degree=s, modulus=modulus)


def field_from_spec(text: str) -> FieldDescriptor:
    """Parse a field spec like "5", "5^2" or "5^2;modulus=t^2+2"."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*modulus\s*=\s*(.+))?",
                     text)
    if m is None:
        raise ValueError(f"bad field spec: {text!r}")
    p = int(m.group(1))
    s = int(m.group(2)) if m.group(2) else 1
    modulus = m.group(3)
    if s == 1 and modulus is None:
        return GF(p)
    prime = _prime_field(p)
    return prime.extend(degree=s, modulus=modulus)


# ---------------------------------------------------------------------------
# elements


class FieldElem:
    """One field element; immutable, hashable, closed over its descriptor."""

    __slots__ = ("field", "_rep", "_idx")

    def __init__(self, field, rep):
        self.field = field
        self._rep = rep
        self._idx = None

    @property
    def value(self) -> int:
        if self.field.base is not None:
            raise ValueError("value is defined for prime-field elements only")
        return self._rep

    @property
    def coeffs(self) -> tuple:
        if self.field.base is None:
            raise ValueError("prime-field elements have no coefficient vector")
        return self._rep

    @property
    def index(self) -> int:
        """Position in the field's lexicographic enumeration."""
        if self._idx is None:
            if self.field.base is None:
                self._idx = self._rep
            else:
                idx, b = 0, self.field.base.order
                for c in reversed(self._rep):
                    idx = idx * b + c.index
                self._idx = idx
        return self._idx

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.elem(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        if f.base is None:
            return FieldElem(f, (self._rep + other._rep) % f.characteristic)
        return FieldElem(f, tuple(a + b for a, b in zip(self._rep, other._rep)))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.base is None:
            return FieldElem(f, (-self._rep) % f.characteristic)
        return FieldElem(f, tuple(-c for c in self._rep))

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
        f = self.field
        if f.base is None:
            return FieldElem(f, (self._rep * other._rep) % f.characteristic)
        a, b = self._rep, other._rep
        d = f.degree
        conv = [f.base.zero()] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] = conv[i + j] + ai * bj
        return FieldElem(f, _reduce_by_modulus(f, conv))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self:
            raise ZeroDivisionError(f"inverse of zero in {self.field!r}")
        f = self.field
        if f.base is None:
            return FieldElem(f, pow(self._rep, f.characteristic - 2, f.characteristic))
        inv = _vinvmod(_vtrim(self._rep), f.modulus, f.base)
        return FieldElem(f, inv + (f.base.zero(),) * (f.degree - len(inv)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.elem(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparisons / sundry -------------------------------------------------

    def __bool__(self):
        if self.field.base is None:
            return self._rep != 0
        return any(self._rep)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field is other.field and self._rep == other._rep
        if isinstance(other, int):
            return self == self.field.elem(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field._key, self.index))

    def __repr__(self):
        return format_element(self)


# ---------------------------------------------------------------------------
# coefficient-vector polynomial helpers (used for modulus arithmetic)
#
# Vectors are trimmed tuples of elements of a single base field, low degree
# first, () meaning zero.


def _vtrim(v):
    v = tuple(v)
    n = len(v)
    while n and not v[n - 1]:
        n -= 1
    return v[:n]


def _vadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _vtrim(out)


def _vneg(a):
    return tuple(-c for c in a)


def _vsub(a, b):
    return _vadd(a, _vneg(b))


def _vmul(a, b, base):
    if not a or not b:
        return ()
    out = [base.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return _vtrim(out)


def _vdivmod(a, b, base):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = lb.inverse()
    quot = [base.zero()] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lb
        k = len(a) - 1 - db
        quot[k] = c
        for j in range(db + 1):
            a[k + j] = a[k + j] - c * b[j]
        a.pop()
        while a and not a[-1]:
            a.pop()
    return _vtrim(quot), _vtrim(a)


def _vmod(a, b, base):
    return _vdivmod(a, b, base)[1]


def _vgcd(a, b, base):
    a, b = _vtrim(a), _vtrim(b)
    while b:
        a, b = b, _vmod(a, b, base)
    if a:
        inv = a[-1].inverse()
        a = tuple(c * inv for c in a)
    return a


def _vpowmod(a, e, m, base):
    result = (base.one(),)
    a = _vmod(a, m, base)
    while e:
        if e & 1:
            result = _vmod(_vmul(result, a, base), m, base)
        a = _vmod(_vmul(a, a, base), m, base)
        e >>= 1
    return result


def _reduce_by_modulus(field, conv):
    """Reduce a (possibly long) coefficient list mod the field's modulus and
    pad to the fixed representation length."""
    base, mod, d = field.base, field.modulus, field.degree
    vec = list(conv)
    for i in range(len(vec) - 1, d - 1, -1):
        c = vec[i]
        if c:
            k = i - d
            for j in range(d):
                vec[k + j] = vec[k + j] - c * mod[j]
        vec.pop()
    vec.extend([base.zero()] * (d - len(vec)))
    return tuple(vec)


def _vinvmod(a, m, base):
    """Inverse of a modulo the monic irreducible m (extended Euclid)."""
    r0, r1 = _vtrim(m), _vtrim(a)
    t0, t1 = (), (base.one(),)
    while r1:
        q, r = _vdivmod(r0, r1, base)
        r0, r1 = r1, r
        t0, t1 = t1, _vsub(t0, _vmul(q, t1, base))
    # r0 is a nonzero constant because m is irreducible and a != 0
    c = r0[0].inverse()
    return _vtrim(tuple(x * c for x in t0))


def _vec_is_irreducible(mod, base) -> bool:
    """Rabin test for a monic coefficient vector over `base`."""
    d = len(mod) - 1
    if d == 1:
        return True
    q = base.order
    x = (base.zero(), base.one())

    def x_power_q_tower(k):
        h = _vmod(x, mod, base)
        for _ in range(k):
            h = _vpowmod(h, q, mod, base)
        return h

    for ell in prime_factors(d):
        g = _vgcd(_vsub(x_power_q_tower(d // ell), x), mod, base)
        if len(g) != 1:
            return False
    return x_power_q_tower(d) == _vmod(x, mod, base)


# ---------------------------------------------------------------------------
# maps between fields


def embed(a: FieldElem, target: FieldDescriptor) -> FieldElem:
    """Embed an element of a tower prefix into the larger field."""
    chain = []
    desc = target
    while desc is not None and desc is not a.field:
        chain.append(desc)
        desc = desc.base
    if desc is None:
        raise ValueError("element's field is not a tower prefix of the target")
    out = a
    for d in reversed(chain):
        out = FieldElem(d, (out,) + (d.base.zero(),) * (d.degree - 1))
    return out


def to_base_field(a: FieldElem) -> FieldElem:
    """Project an element lying in the next-lower level down one level."""
    f = a.field
    if f.base is None:
        raise ValueError("prime-field element has no lower level")
    if any(a._rep[1:]):
        raise ValueError("element does not lie in the base field")
    return a._rep[0]


def subfield_descriptor(field: FieldDescriptor, q: int):
    """The tower prefix of the given order, or None."""
    desc = field
    while desc is not None:
        if desc.order == q:
            return desc
        desc = desc.base
    return None


def subfield_elements(field: FieldDescriptor, q: int):
    """Elements of the order-q tower prefix, embedded into `field`."""
    sub = subfield_descriptor(field, q)
    if sub is None:
        raise ValueError(f"field tower of {field!r} has no level of order {q}")
    return [embed(e, field) for e in sub.elements()]


def prime_coordinates(a: FieldElem) -> tuple[int, ...]:
    """Flatten an element to its GF(p)-coordinate vector."""
    if a.field.base is None:
        return (a._rep,)
    out: list[int] = []
    for c in a._rep:
        out.extend(prime_coordinates(c))
    return tuple(out)


def from_prime_coordinates(field: FieldDescriptor, coords) -> FieldElem:
    coords = list(coords)
    if len(coords) != field.dim_over_prime:
        raise ValueError("coordinate vector has the wrong length")
    if field.base is None:
        return field.elem(int(coords[0]))
    step = field.base.dim_over_prime
    parts = [from_prime_coordinates(field.base, coords[i:i + step])
             for i in range(0, len(coords), step)]
    return FieldElem(field, tuple(parts))


def prime_basis(field: FieldDescriptor) -> list[FieldElem]:
    """The standard GF(p)-basis matching prime_coordinates."""
    dim = field.dim_over_prime
    basis = []
    for j in range(dim):
        coords = [0] * dim
        coords[j] = 1
        basis.append(from_prime_coordinates(field, coords))
    return basis


# ---------------------------------------------------------------------------
# Frobenius, trace, Artin-Schreier


def frobenius(a: FieldElem, base_order: int, i: int = 1) -> FieldElem:
    """a ** (base_order ** i), validated against the tower structure."""
    p = a.field.characteristic
    if ilog(p, base_order) is None:
        raise ValueError(f"{base_order} is not a power of the characteristic {p}")
    if ilog(base_order, a.field.order) is None:
        raise ValueError(f"field order {a.field.order} is not a power of {base_order}")
    if i < 0:
        raise ValueError("frobenius iterate must be >= 0")
    if not a or i == 0:
        return a
    e = pow(base_order, i, a.field.order - 1)
    if e == 0:
        e = a.field.order - 1
    return a ** e


def trace_to_subfield(a: FieldElem, ext_degree: int, base_order: int) -> FieldElem:
    """Relative trace sum a + a^q + ... + a^(q^(beta-1)) down to GF(q).

    The result is returned inside the original field; it lies in the
    q-element subfield.
    """
    if a.field.order != base_order ** ext_degree:
        raise ValueError("extension degree does not match the field structure")
    acc = a
    cur = a
    for _ in range(ext_degree - 1):
        cur = frobenius(cur, base_order, 1)
        acc = acc + cur
    return acc


def artin_schreier_solve(a: FieldElem, base_order: int):
    """A solution y of y**q - y = a, or None when no solution exists.

    Solved as a GF(p)-linear system on the field's coordinate space; the
    solvable inputs are exactly the kernel of the trace down to GF(q).
    """
    field = a.field
    q = base_order
    p = field.characteristic
    if ilog(p, q) is None or ilog(q, field.order) is None:
        raise ValueError("base order does not fit the field structure")
    prime = field.prime_subfield()
    basis = prime_basis(field)
    images = [prime_coordinates(b ** q - b) for b in basis]
    dim = len(basis)
    rows = [[prime.elem(images[j][i]) for j in range(dim)] for i in range(dim)]
    rhs = [prime.elem(c) for c in prime_coordinates(a)]
    x = linalg.solve(rows, rhs, prime)
    if x is None:
        return None
    return from_prime_coordinates(field, [c.value for c in x])


# ---------------------------------------------------------------------------
# text formats


def format_element(a: FieldElem) -> str:
    f = a.field
    if f.base is None:
        return str(a._rep)
    name = f"t{f.level - 1}"
    terms = []
    for j in range(f.degree - 1, -1, -1):
        c = a._rep[j]
        if not c:
            continue
        cs = format_element(c)
        if j == 0:
            terms.append(cs)
            continue
        xs = name if j == 1 else f"{name}^{j}"
        if cs == "1":
            terms.append(xs)
        elif "+" in cs or "*" in cs:
            terms.append(f"({cs})*{xs}")
        else:
            terms.append(f"{cs}*{xs}")
    return "+".join(terms) if terms else "0"


def format_polynomial(coeffs, var: str) -> str:
    """Render a coefficient vector (low to high) as '...*var^k+...' text."""
    coeffs = tuple(coeffs)
    terms = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if not c:
            continue
        cs = format_element(c)
        if j == 0:
            terms.append(cs)
            continue
        xs = var if j == 1 else f"{var}^{j}"
        if cs == "1":
            terms.append(xs)
        elif "+" in cs or "*" in cs:
            terms.append(f"({cs})*{xs}")
        else:
            terms.append(f"{cs}*{xs}")
    return "+".join(terms) if terms else "0"


_TOKEN_RE = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|\-|\(|\)")


class _ExprParser:
    """Recursive-descent parser for polynomial/element expressions.

    Values are manipulated as trimmed coefficient vectors over `field` in
    the designated variable; an empty variable-name set parses constants.
    """

    def __init__(self, field, text, var_names):
        self.field = field
        self.var_names = var_names
        self.tokens = _TOKEN_RE.findall(text)
        if "".join(self.tokens).replace(" ", "") != text.replace(" ", ""):
            raise ValueError(f"cannot tokenize expression: {text!r}")
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise ValueError(f"unexpected token {self.peek()!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = _vadd(v, w) if op == "+" else _vsub(v, w)
        return v

    def term(self):
        v = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                v = _vmul(v, self.factor(), self.field)
            elif tok is not None and (tok[0].isalnum() or tok == "("):
                # implicit multiplication, e.g. "2x"
                v = _vmul(v, self.factor(), self.field)
            else:
                return v

    def factor(self):
        tok = self.peek()
        if tok == "-":
            self.take()
            return _vneg(self.factor())
        if tok == "(":
            self.take()
            v = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parentheses")
            return self.maybe_power(v)
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.take()
        if tok.isdigit():
            c = self.field.elem(int(tok))
            return self.maybe_power(_vtrim((c,)))
        if tok in self.var_names:
            return self.maybe_power((self.field.zero(), self.field.one()))
        return self.maybe_power(_vtrim((self.generator_constant(tok),)))

    def maybe_power(self, v):
        if self.peek() == "^":
            self.take()
            e = self.take()
            if e is None or not e.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            e = int(e)
            out = (self.field.one(),)
            for _ in range(e):
                out = _vmul(out, v, self.field)
            return _vtrim(out)
        return v

    def generator_constant(self, name):
        field = self.field
        if name == "t" and field.level >= 1:
            return field.generator()
        m = re.fullmatch(r"t(\d+)", name)
        if m:
            lvl = int(m.group(1))
            if lvl < field.level:
                chain = field.tower_chain()
                return embed(chain[lvl + 1].generator(), field)
        raise ValueError(f"unknown symbol {name!r} in expression")


def parse_poly_coeffs(field, text, var_names=("x",)):
    """Parse polynomial text into a trimmed coefficient vector over field."""
    return _ExprParser(field, text, set(var_names)).parse()


def parse_element(field, text) -> FieldElem:
    coeffs = _ExprParser(field, text, set()).parse()
    if len(coeffs) > 1:
        raise ValueError("expression is not a field constant")
    return coeffs[0] if coeffs else field.zero()
