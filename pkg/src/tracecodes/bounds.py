"""Every inequality of the source material as a pure numeric formula.

Formulas are evaluated in exact rational arithmetic wherever they are
rational; the irrational pieces (q^(1/2), q^(r/4) for odd exponents) are
bracketed by outward-rounded rational intervals whose precision is raised
adaptively until every holds/violated verdict is decided exactly.  Nothing
here constructs the Artin-Schreier cover itself: its genus enters only
through the closed-form upper bound.

Conventions: q is the field size, g the genus (a parameter; the function
field under construction always has g = 0), n the code length, beta a
uniform place degree (r in the place-count estimates), a = deg G+ and
b = deg (G+)^0 the degrees of the positive part of G and of its reduced
support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import codeanalysis, funcfield, tracecode
from ._numutil import divisors
from .polyring import moebius

_DIGIT_LADDER = (40, 80, 160, 320)


# ---------------------------------------------------------------------------
# outward-rounded interval arithmetic


class Ival:
    """A closed rational interval [lo, hi] certifying one real value."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if hi < lo:
            raise ValueError("empty interval")
        self.lo = lo
        self.hi = hi

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @staticmethod
    def _coerce(x):
        if isinstance(x, Ival):
            return x
        if isinstance(x, (int, Fraction)):
            return Ival(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Ival(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Ival(-self.hi, -self.lo)

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
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Ival(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval division through zero")
        quotients = (self.lo / other.lo, self.lo / other.hi,
                     self.hi / other.lo, self.hi / other.hi)
        return Ival(min(quotients), max(quotients))

    def __rtruediv__(self, other):
        return Ival(other) / self

    def __float__(self):
        return float((self.lo + self.hi) / 2)

    def bracket_strings(self) -> tuple[str, str]:
        return (str(self.lo), str(self.hi))

    def __repr__(self):
        if self.is_point:
            return f"Ival({self.lo})"
        return f"Ival({self.lo}, {self.hi})"


def _sqrt_fraction(x: Fraction, digits: int) -> Ival:
    if x < 0:
        raise ValueError("square root of a negative value")
    scale = 10 ** digits
    t = (x.numerator * scale * scale) // x.denominator
    r = math.isqrt(t)
    return Ival(Fraction(r, scale), Fraction(r + 2, scale))


def _sqrt_ival(v: Ival, digits: int) -> Ival:
    lo = _sqrt_fraction(v.lo, digits).lo
    hi = _sqrt_fraction(v.hi, digits).hi
    return Ival(lo, hi)


def _q_pow_half(q: int, r: int, digits: int) -> Ival:
    """q**(r/2) as an exact point or certified interval."""
    if r % 2 == 0:
        return Ival(q ** (r // 2))
    return _sqrt_fraction(Fraction(q ** r), digits)


def _q_pow_quarter(q: int, r: int, digits: int) -> Ival:
    """q**(r/4)."""
    if r % 4 == 0:
        return Ival(q ** (r // 4))
    if r % 2 == 0:
        return _sqrt_fraction(Fraction(q ** (r // 2)), digits)
    return _sqrt_ival(_sqrt_fraction(Fraction(q ** r), digits), digits)


def delta_indicator(r: int) -> int:
    """1 at r = 1 and 0 for r > 1."""
    if r < 1:
        raise ValueError("degree must be >= 1")
    return 1 if r == 1 else 0


def compare(make, target) -> int:
    """Sign of (value described by make(digits)) - target, decided exactly.

    make is re-invoked at increasing precision until the interval separates
    from the target; a point interval is compared exactly.
    """
    target = Fraction(target)
    for digits in _DIGIT_LADDER:
        iv = make(digits)
        if iv.hi < target:
            return -1
        if iv.lo > target:
            return 1
        if iv.is_point:
            return (iv.lo > target) - (iv.lo < target)
    raise ArithmeticError("could not separate the bound from the target value")


# ---------------------------------------------------------------------------
# place-count estimates


def place_count_interval(q: int, g: int, r: int, digits: int = 40):
    """Coarse two-sided estimate: the interval around q^r / r of half-width
    (q/(q-1) + 2g sqrt(q)/(sqrt(q)-1)) * q^(r/2) / r.

    Returns (low, high) endpoint intervals.
    """
    if r < 1:
        raise ValueError("degree must be >= 1")
    center = Fraction(q ** r, r)
    sq = _q_pow_half(q, 1, digits)
    halfwidth = (Fraction(q, q - 1) + 2 * g * sq / (sq - 1)) \
        * _q_pow_half(q, r, digits) / r
    return (center - halfwidth, center + halfwidth)


def refined_center(q: int, r: int) -> int:
    """(1/r) sum over d | r of mu(r/d) q^d, plus 1 when r = 1; equals the
    exact place count on a genus-0 field."""
    total = sum(moebius(r // d) * q ** d for d in divisors(r))
    assert total % r == 0
    return total // r + delta_indicator(r)


def place_count_interval_refined(q: int, g: int, r: int, digits: int = 40):
    """Moebius-corrected estimate; every error term carries a factor 2g, so
    the interval is a single point on a genus-0 field."""
    if r < 1:
        raise ValueError("degree must be >= 1")
    center = Fraction(refined_center(q, r))
    sq = _q_pow_half(q, 1, digits)
    halfwidth = Ival(Fraction(2 * g, r)) * _q_pow_half(q, r, digits)
    if r > 1:
        halfwidth = halfwidth + Fraction(2 * g, r) * sq \
            * (_q_pow_quarter(q, r, digits) - 1) / (sq - 1)
    return (center - halfwidth, center + halfwidth)


# ---------------------------------------------------------------------------
# genus of the Artin-Schreier cover, dimension thresholds


def cover_genus_bound(q: int, g: int, deg_pos: int, deg_pos_support: int) -> Fraction:
    """Upper bound q*g + (q-1)(-2 + deg G+ + deg (G+)^0)/2 for the genus of
    the degree-q cover attached to a non-degenerate function."""
    return q * g + Fraction((q - 1) * (-2 + deg_pos + deg_pos_support), 2)


def _threshold_term(q, g, t, deg_pos, deg_pos_support, digits) -> Ival:
    """One degree's share of the dimension threshold."""
    gb = cover_genus_bound(q, g, deg_pos, deg_pos_support)
    sq = _q_pow_half(q, 1, digits)
    qh = _q_pow_half(q, t, digits)
    term = Ival(delta_indicator(t) + Fraction(q ** t, t))
    if t > 1:
        term = term + Fraction(q, t) * (qh - 1) / (q - 1)
    err = qh / t
    if t > 1:
        err = err + sq * (_q_pow_quarter(q, t, digits) - 1) / (t * (sq - 1))
    return term + 2 * gb * err


def dim_threshold_uniform(q, g, n, beta, deg_pos, deg_pos_support,
                          digits: int = 40) -> Ival:
    """The threshold that the count of degree-beta places must exceed for
    the trace code to have full dimension l(G) (uniform place degrees)."""
    return -Fraction((q - 1) * n) \
        + _threshold_term(q, g, beta, deg_pos, deg_pos_support, digits)


def dim_threshold_mixed(q, g, n, degrees, deg_pos, deg_pos_support,
                        digits: int = 40) -> Ival:
    """Mixed-degree variant: one term per distinct place degree."""
    total = Ival(-Fraction((q - 1) * n))
    for t in degrees:
        total = total + _threshold_term(q, g, t, deg_pos, deg_pos_support,
                                        digits)
    return total


def dim_upper_bound(G, beta_sum: int) -> int:
    """Dimension bound l(G) - l(floor(G/q)) (+1 when floor(G/q) >= 0),
    valid when deg G < sum(beta_i)."""
    if G.degree >= beta_sum:
        raise ValueError("hypothesis deg G < sum(beta_i) violated")
    q = G.field.order
    floored = funcfield.floor_divisor(G, q)
    bound = funcfield.rr_dim(G) - funcfield.rr_dim(floored)
    if floored.is_effective or floored.is_zero():
        bound += 1
    return bound


# ---------------------------------------------------------------------------
# minimum-distance lower bounds


def _mindist_error_bracket(q, t, digits) -> Ival:
    """2 q^(t/2) / (q t) + (1-delta(t)) 2 sqrt(q) (q^(t/4)-1) /
    (q t (sqrt(q)-1))."""
    sq = _q_pow_half(q, 1, digits)
    out = Fraction(2, q * t) * _q_pow_half(q, t, digits)
    if t > 1:
        out = out + Fraction(2, t * q) * sq \
            * (_q_pow_quarter(q, t, digits) - 1) / (sq - 1)
    return out


def min_distance_lower_uniform(q, g, n, beta, deg_pos, deg_pos_support,
                               digits: int = 40) -> Ival:
    """General lower bound for uniform place degree beta and genus g."""
    gb = cover_genus_bound(q, g, deg_pos, deg_pos_support)
    val = Ival(n - Fraction(delta_indicator(beta), q)
               - Fraction(q ** (beta - 1), beta))
    if beta > 1:
        val = val - (_q_pow_half(q, beta, digits) - 1) / (beta * (q - 1))
    return val - _mindist_error_bracket(q, beta, digits) * gb


def min_distance_lower_rational(q, n, beta, s, deg_pos, deg_pos_support,
                                digits: int = 40) -> Ival:
    """Genus-0 specialization with the exact residual place count
    s = B_beta - n."""
    gb = cover_genus_bound(q, 0, deg_pos, deg_pos_support)
    return Ival(Fraction(n * (q - 1), q) - Fraction(s, q)) \
        - _mindist_error_bracket(q, beta, digits) * gb


def min_distance_lower_mixed(q, g, n, degrees, deg_pos, deg_pos_support,
                             digits: int = 40) -> Ival:
    """Mixed-degree lower bound: n minus (1/q) times one estimate per
    distinct degree, each shaped like the uniform case."""
    total = Ival(0)
    for t in degrees:
        total = total + _threshold_term(q, g, t, deg_pos, deg_pos_support,
                                        digits)
    return n - total / q


def rational_bound_terms(q, n, beta, s, deg_pos, deg_pos_support,
                         digits: int = 40):
    """The three terms of the genus-0 bound, for term-by-term comparisons:
    (n(q-1)/q, s/q, error-bracket * genus-term)."""
    gb = cover_genus_bound(q, 0, deg_pos, deg_pos_support)
    return (Ival(Fraction(n * (q - 1), q)),
            Ival(Fraction(s, q)),
            _mindist_error_bracket(q, beta, digits) * gb)


def classical_deg1_terms(q, n, s, deg_pos, deg_pos_support,
                         digits: int = 40):
    """The classical degree-one trace-code bound written independently:
    d >= n(q-1)/q - s/q - (2 sqrt(q)/q) * (q-1)(-2 + a + b)/2."""
    gb = cover_genus_bound(q, 0, deg_pos, deg_pos_support)
    sq = _q_pow_half(q, 1, digits)
    return (Ival(Fraction(n * (q - 1), q)),
            Ival(Fraction(s, q)),
            Fraction(2, q) * sq * gb)


# ---------------------------------------------------------------------------
# verdicts on one built code


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated bound: its value, the exact quantity, and a verdict."""

    name: str
    value: float | None
    bracket: tuple[str, str] | None
    exact: object
    verdict: str  # holds | vacuous | violated
    hypotheses: dict

    def to_json_dict(self):
        return {
            "name": self.name,
            "value": self.value,
            "bracket": list(self.bracket) if self.bracket else None,
            "exact": self.exact,
            "verdict": self.verdict,
            "hypotheses": self.hypotheses,
        }


@dataclass(frozen=True)
class BoundsReport:
    checks: tuple

    def __getitem__(self, name: str) -> BoundCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def names(self):
        return [c.name for c in self.checks]

    def violated(self):
        return [c for c in self.checks if c.verdict == "violated"]

    def to_json_list(self):
        return [c.to_json_dict() for c in self.checks]


def _code_shape(code):
    spec = code.spec
    G = spec.divisor
    q = spec.field.order
    pos = funcfield.positive_part(G)
    pos0 = funcfield.positive_support_divisor(G)
    return q, G, spec.n, spec.beta_profile, pos.degree, pos0.degree


@dataclass(frozen=True)
class DimensionVerdict:
    nondegenerate: bool
    place_count: int
    threshold: Ival
    count_exceeds: bool
    uniform: bool
    dim: int
    rr_dim: int
    verdict: str  # holds | vacuous | violated

    @property
    def hypothesis_met(self) -> bool:
        return self.nondegenerate and self.count_exceeds


def exact_dim_check(code, digits: int = 40) -> DimensionVerdict:
    """When L(G) is non-degenerate and the relevant place count exceeds the
    threshold, the code dimension must equal l(G) exactly."""
    q, G, n, profile, a, b = _code_shape(code)
    degrees = sorted(set(profile))
    uniform = len(degrees) == 1
    nondeg = tracecode.space_nondegenerate(G)
    count = sum(funcfield.count_places(q, t) for t in degrees)
    if uniform:
        def make(d):
            return dim_threshold_uniform(q, 0, n, degrees[0], a, b, d)
    else:
        def make(d):
            return dim_threshold_mixed(q, 0, n, degrees, a, b, d)
    exceeds = compare(make, count) < 0  # threshold < count
    ldim = funcfield.rr_dim(G)
    if not (nondeg and exceeds):
        verdict = "vacuous"
    elif code.k == ldim:
        verdict = "holds"
    else:
        verdict = "violated"
    return DimensionVerdict(nondegenerate=nondeg, place_count=count,
                            threshold=make(digits), count_exceeds=exceeds,
                            uniform=uniform, dim=code.k, rr_dim=ldim,
                            verdict=verdict)


def _lower_bound_verdict(make, d_exact) -> str:
    """Verdict for a lower bound against the exact minimum distance."""
    if d_exact is None:
        return "vacuous"
    sign_zero = compare(make, 0)
    if sign_zero <= 0:
        return "vacuous"  # non-positive bounds claim nothing
    return "holds" if compare(make, d_exact) <= 0 else "violated"


def bounds_report(code, analysis=None, digits: int = 40) -> BoundsReport:
    """Evaluate every applicable bound for one built code."""
    q, G, n, profile, a, b = _code_shape(code)
    degrees = sorted(set(profile))
    uniform = len(degrees) == 1
    checks = []

    # place-count estimates, exact on GF(q)(x)
    for r in degrees:
        b_r = funcfield.count_places(q, r)
        lo, hi = place_count_interval(q, 0, r, digits)
        inside = (compare(lambda d: place_count_interval(q, 0, r, d)[0], b_r) <= 0
                  and compare(lambda d: place_count_interval(q, 0, r, d)[1], b_r) >= 0)
        checks.append(BoundCheck(
            name=f"place_count_interval_r{r}",
            value=float((lo + hi) * Fraction(1, 2)),
            bracket=(str(lo.lo), str(hi.hi)),
            exact=b_r,
            verdict="holds" if inside else "violated",
            hypotheses={"genus": 0, "r": r}))
        rlo, rhi = place_count_interval_refined(q, 0, r, digits)
        point_exact = rlo.is_point and rhi.is_point and rlo.lo == rhi.lo == b_r
        checks.append(BoundCheck(
            name=f"place_count_refined_r{r}",
            value=float(rlo),
            bracket=(str(rlo.lo), str(rhi.hi)),
            exact=b_r,
            verdict="holds" if point_exact else "violated",
            hypotheses={"genus": 0, "r": r}))

    gb = cover_genus_bound(q, 0, a, b)
    checks.append(BoundCheck(
        name="cover_genus_upper",
        value=float(gb),
        bracket=(str(gb), str(gb)),
        exact=None,
        verdict="vacuous",
        hypotheses={"deg_pos": a, "deg_pos_support": b}))

    # dimension bounds
    ldim = funcfield.rr_dim(G)
    checks.append(BoundCheck(
        name="dim_le_l_G",
        value=float(ldim),
        bracket=(str(ldim), str(ldim)),
        exact=code.k,
        verdict="holds" if code.k <= ldim else "violated",
        hypotheses={}))
    beta_sum = sum(profile)
    if G.degree < beta_sum:
        du = dim_upper_bound(G, beta_sum)
        checks.append(BoundCheck(
            name="dim_upper_floor",
            value=float(du),
            bracket=(str(du), str(du)),
            exact=code.k,
            verdict="holds" if code.k <= du else "violated",
            hypotheses={"deg_G_lt_beta_sum": True}))
    else:
        checks.append(BoundCheck(
            name="dim_upper_floor", value=None, bracket=None, exact=code.k,
            verdict="vacuous", hypotheses={"deg_G_lt_beta_sum": False}))

    dim_verdict = exact_dim_check(code, digits)
    thr = dim_verdict.threshold
    checks.append(BoundCheck(
        name="exact_dim_threshold" + ("_uniform" if uniform else "_mixed"),
        value=float(thr),
        bracket=thr.bracket_strings(),
        exact=code.k,
        verdict=dim_verdict.verdict,
        hypotheses={
            "nondegenerate": dim_verdict.nondegenerate,
            "place_count": dim_verdict.place_count,
            "count_exceeds_threshold": dim_verdict.count_exceeds,
            "rr_dim": dim_verdict.rr_dim,
        }))

    # minimum-distance bounds
    d_exact = analysis.d if analysis is not None else None
    rr = code.rr_space
    nontrivial = (rr.dimension >= 1
                  and any(not f.is_constant for f in rr.basis))
    nondeg = dim_verdict.nondegenerate
    applicable = nontrivial and nondeg
    hyp = {"L_G_nontrivial": nontrivial, "nondegenerate": nondeg,
           "exact_d": d_exact}
    if uniform:
        beta = degrees[0]
        s = funcfield.count_places(q, beta) - n

        def make_u(dd):
            return min_distance_lower_uniform(q, 0, n, beta, a, b, dd)

        def make_r(dd):
            return min_distance_lower_rational(q, n, beta, s, a, b, dd)

        for name, make in (("min_dist_lower_uniform", make_u),
                           ("min_dist_lower_rational", make_r)):
            iv = make(digits)
            checks.append(BoundCheck(
                name=name, value=float(iv), bracket=iv.bracket_strings(),
                exact=d_exact,
                verdict=_lower_bound_verdict(make, d_exact) if applicable
                else "vacuous",
                hypotheses=dict(hyp, s=s) if name.endswith("rational") else hyp))
    else:
        def make_m(dd):
            return min_distance_lower_mixed(q, 0, n, degrees, a, b, dd)

        iv = make_m(digits)
        checks.append(BoundCheck(
            name="min_dist_lower_mixed", value=float(iv),
            bracket=iv.bracket_strings(), exact=d_exact,
            verdict=_lower_bound_verdict(make_m, d_exact) if applicable
            else "vacuous",
            hypotheses=hyp))

    return BoundsReport(checks=tuple(checks))
