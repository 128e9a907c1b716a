import random

import pytest

from tracecodes.gf import GF, trace_to_subfield
from tracecodes.funcfield import (Divisor, Place, RationalFunction, count_places,
                                  divisor_of, evaluate, finite_place,
                                  floor_divisor, format_divisor, infinite_place,
                                  is_in_rr_space, parse_divisor, parse_place,
                                  positive_part, positive_support_divisor,
                                  residue_field, rr_basis, rr_dim, valuation)
from tracecodes.polyring import Poly, monic_irreducibles


@pytest.fixture
def F5():
    return GF(5)


def test_place_basics(F5):
    x = Poly.x(F5)
    P = finite_place(x ** 2 + 2)
    assert P.degree == 2 and not P.is_infinite
    assert infinite_place(F5).degree == 1
    assert P == finite_place(x ** 2 + 2)
    with pytest.raises(ValueError):
        finite_place(x ** 2 - 1)
    with pytest.raises(ValueError):
        finite_place(2 * x)


def test_place_text(F5):
    assert str(parse_place(F5, "Pinf")) == "Pinf"
    assert parse_place(F5, "[x^2+2]") == finite_place(Poly.x(F5) ** 2 + 2)
    with pytest.raises(ValueError):
        parse_place(F5, "x^2+2")


def test_divisor_algebra(F5):
    x = Poly.x(F5)
    Pinf = infinite_place(F5)
    Px = finite_place(x)
    G = divisor_of(Pinf, 2) + divisor_of(Px, 3)
    assert G.degree == 5
    assert (G - G).is_zero()
    assert (2 * G).degree == 10
    assert G[Pinf] == 2 and G[finite_place(x + 1)] == 0
    assert not (G - divisor_of(Px, 4)).is_effective


def test_divisor_text_roundtrip(F5):
    G = parse_divisor(F5, "2*Pinf + 1*[x^2+2] - 3*[x+1]")
    assert G.degree == 2 + 2 - 3
    again = parse_divisor(F5, format_divisor(G))
    assert again == G
    assert parse_divisor(F5, "0").is_zero()
    assert parse_divisor(F5, "Pinf - [x]").degree == 0


def test_valuation_examples(F5):
    x = Poly.x(F5)
    assert valuation(RationalFunction(x ** 2), infinite_place(F5)) == -2
    f = RationalFunction(Poly.one(F5), x ** 2 + 2)
    assert valuation(f, finite_place(x ** 2 + 2)) == -1
    g = RationalFunction((x - 1) ** 3, x + 1)
    assert valuation(g, finite_place(x - 1)) == 3
    with pytest.raises(ValueError):
        valuation(RationalFunction(Poly.zero(F5)), infinite_place(F5))


def test_valuation_degree_sum_on_constructed_functions():
    # build f from a known factorization, so every valuation is forced
    rng = random.Random(20240811)
    for q in (2, 3, 5, 7):
        field = GF(q)
        pool = [(p, 1) for p in monic_irreducibles(1, field)]
        pool += [(p, 2) for p in monic_irreducibles(2, field)[:4]]
        pool += [(p, 3) for p in monic_irreducibles(3, field)[:2]]
        for _ in range(8):
            num, den = Poly.one(field), Poly.one(field)
            chosen = rng.sample(range(len(pool)), k=min(4, len(pool)))
            exps = {}
            for i in chosen:
                poly, degree = pool[i]
                e = rng.randint(-2, 2)
                if e > 0:
                    num = num * poly ** e
                elif e < 0:
                    den = den * poly ** (-e)
                if e:
                    exps[finite_place(poly, check=False)] = (e, degree)
            scale = field.from_index(rng.randrange(1, q))
            f = RationalFunction(scale * num, den)
            total = 0
            for place, (e, degree) in exps.items():
                assert valuation(f, place) == e
                total += e * degree
            vinf = valuation(f, infinite_place(field))
            assert vinf == f.den.degree - f.num.degree
            assert total + vinf == 0


def test_evaluate_examples(F5):
    x = Poly.x(F5)
    P = finite_place(x ** 2 + 2)
    v = evaluate(RationalFunction.x(F5), P)
    assert v * v == 3  # the residue class of x squares to -2 = 3
    assert trace_to_subfield(v, 2, 5) == 0
    assert evaluate(RationalFunction.constant(F5, 7), P) == 2
    assert evaluate(RationalFunction(x ** 2), finite_place(x - 3)) == 4
    with pytest.raises(ValueError):
        evaluate(RationalFunction(Poly.one(F5), x ** 2 + 2), P)


def test_evaluate_at_infinity(F5):
    x = Poly.x(F5)
    Pinf = infinite_place(F5)
    assert evaluate(RationalFunction(2 * x + 1, x + 3), Pinf) == 2
    assert evaluate(RationalFunction(Poly.one(F5), x), Pinf) == 0
    with pytest.raises(ValueError):
        evaluate(RationalFunction(x ** 2), Pinf)


def test_residue_field_reuse(F5):
    x = Poly.x(F5)
    P = finite_place(x ** 2 + 3)
    R = residue_field(P)
    assert R.order == 25 and residue_field(P) is R
    assert residue_field(infinite_place(F5)) is F5


def test_rr_basis_examples(F5):
    x = Poly.x(F5)
    Pinf = infinite_place(F5)
    rr = rr_basis(divisor_of(Pinf, 2))
    assert [str(b) for b in rr.basis] == ["1", "x", "x^2"]
    assert rr.dimension == 3
    assert rr_basis(divisor_of(Pinf, -1)).dimension == 0
    G = divisor_of(finite_place(x ** 2 + 2))
    rrp = rr_basis(G)
    assert rrp.dimension == 3
    for f in rrp.basis:
        for place in [finite_place(x ** 2 + 2), infinite_place(F5)]:
            assert valuation(f, place) >= -G[place]


def test_rr_dimension_and_membership_random():
    rng = random.Random(77)
    for q in (2, 3, 5):
        field = GF(q)
        Pinf = infinite_place(field)
        finite_pool = ([finite_place(p) for p in monic_irreducibles(1, field)]
                       + [finite_place(p) for p in monic_irreducibles(2, field)[:3]])
        for _ in range(12):
            coeffs = {Pinf: rng.randint(-2, 4)}
            for P in rng.sample(finite_pool, k=min(2, len(finite_pool))):
                coeffs[P] = rng.randint(-2, 3)
            G = Divisor(field, coeffs)
            if abs(G.degree) > 8:
                continue
            rr = rr_basis(G)
            assert rr.dimension == rr_dim(G) == max(G.degree + 1, 0)
            for f in rr.basis:
                assert is_in_rr_space(f, G)
                for place in G.support() + [Pinf]:
                    assert valuation(f, place) >= -G[place]
            if rr.dimension:
                # a pole order bump leaves the smaller space
                f = rr.basis[-1]
                shrunk = G - divisor_of(Pinf, G[Pinf] + f.num.degree + 9)
                assert not is_in_rr_space(f, shrunk)


def test_floor_and_positive_parts(F5):
    x = Poly.x(F5)
    Pinf, Px = infinite_place(F5), finite_place(x)
    assert floor_divisor(divisor_of(Pinf, 7), 5) == divisor_of(Pinf, 1)
    assert floor_divisor(divisor_of(Pinf, 2), 5).is_zero()
    G = divisor_of(Pinf, 7) - divisor_of(Px, 3)
    assert floor_divisor(G, 5) == divisor_of(Pinf, 1) - divisor_of(Px, 3)
    G2 = divisor_of(Px, 3) - divisor_of(Pinf, 2)
    assert positive_part(G2) == divisor_of(Px, 3)
    assert positive_support_divisor(G2) == divisor_of(Px, 1)
    G3 = divisor_of(Pinf, 2)
    assert (positive_part(G3).degree, positive_support_divisor(G3).degree) == (2, 1)
    assert positive_part(-G3).is_zero()


def test_count_places():
    assert count_places(5, 2) == 10
    assert count_places(GF(5), 1) == 6
    assert count_places(2, 3) == 2
    assert count_places(7, 1) == 8
    with pytest.raises(ValueError):
        count_places(5, 0)
