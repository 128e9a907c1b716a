import random

import pytest

from tracecodes import linalg
from tracecodes.gf import GF, embed, trace_to_subfield
from tracecodes.funcfield import (Divisor, RationalFunction, divisor_of,
                                  evaluate, finite_place, infinite_place,
                                  parse_divisor, residue_field, rr_basis)
from tracecodes.polyring import Poly, monic_irreducibles, poly_trace
from tracecodes.tracecode import (CodeSpec, build, codeword, goppa_rows,
                                  is_degenerate, quasi_cyclic_family,
                                  shift_by_rows, space_nondegenerate)


def example_code():
    return quasi_cyclic_family(5, 2, 2)


def test_spec_validation_messages():
    F5 = GF(5)
    x = Poly.x(F5)
    P = finite_place(x ** 2 + 2)
    G = divisor_of(infinite_place(F5), 2)
    with pytest.raises(ValueError, match="duplicate"):
        CodeSpec(F5, [P, P], G)
    with pytest.raises(ValueError, match="infinite"):
        CodeSpec(F5, [infinite_place(F5)], G)
    with pytest.raises(ValueError, match="supp"):
        CodeSpec(F5, [P], G + divisor_of(P, 1))
    F4 = GF(4)
    y = Poly.x(F4)
    P4 = finite_place(y ** 2 + y + F4.generator())
    with pytest.raises(ValueError, match="coprime"):
        CodeSpec(F4, [P4], divisor_of(infinite_place(F4), 1))
    spec = CodeSpec(F4, [P4], divisor_of(infinite_place(F4), 1),
                    allow_wild_degrees=True)
    assert spec.beta_profile == (2,)


def test_codeword_examples():
    grid, code = example_code()
    F5 = code.field
    ones = codeword(RationalFunction.constant(F5, 1), code.spec)
    assert all(v == 2 for v in ones)
    zero = codeword(RationalFunction.constant(F5, 0), code.spec)
    assert not any(zero)
    fx = codeword(RationalFunction.x(F5), code.spec)
    assert [v.index for v in fx] == [0, 0, 4, 4, 3, 3, 2, 2, 1, 1]
    assert sum(1 for v in fx if v) == 8


def test_codeword_linearity():
    grid, code = example_code()
    F5 = code.field
    rng = random.Random(5)
    rr = code.rr_space
    for _ in range(10):
        a, b = (F5.from_index(rng.randrange(5)) for _ in range(2))
        f, g = rng.choice(rr.basis), rng.choice(rr.basis)
        lhs = codeword(a * f + b * g, code.spec)
        rhs = tuple(a * u + b * v
                    for u, v in zip(codeword(f, code.spec), codeword(g, code.spec)))
        assert lhs == rhs


def test_build_example_parameters():
    grid, code = example_code()
    assert code.n == 10 and code.k == 3
    assert len(code.kernel_basis) + code.k == code.rr_space.dimension
    assert code.rr_space.dimension == 3


def test_build_rank_against_bruteforce_oracle():
    # three degree-2 places over GF(3), G = Pinf: oracle span enumeration
    F3 = GF(3)
    places = [finite_place(f) for f in monic_irreducibles(2, F3)]
    spec = CodeSpec(F3, places, divisor_of(infinite_place(F3), 1))
    code = build(spec)
    span = set()
    for a in range(3):
        for b in range(3):
            vec = tuple(a * u + b * v for u, v in zip(code.rows[0], code.rows[1]))
            span.add(tuple(e.index for e in vec))
    assert len(span) == 3 ** code.k
    assert code.k == 2 and code.k <= 2


def test_constant_codewords_weight_zero_or_n():
    grid, code = example_code()
    F5 = code.field
    for c in F5.elements():
        w = sum(1 for v in codeword(RationalFunction.constant(F5, c), code.spec) if v)
        assert w in (0, code.n)
    # with p dividing every degree, constants map to zero
    F2 = GF(2)
    y = Poly.x(F2)
    spec = CodeSpec(F2, [finite_place(y ** 2 + y + 1)],
                    Divisor(F2), allow_wild_degrees=True)
    assert codeword(RationalFunction.constant(F2, 1), spec) == (F2.zero(),)


def test_trivial_code_from_zero_divisor():
    F5 = GF(5)
    places = [finite_place(f) for f in monic_irreducibles(1, F5)]
    spec = CodeSpec(F5, places, Divisor(F5))
    code = build(spec)
    assert code.k == 1
    assert code.rows[0] == tuple(F5.one() for _ in range(5))


def test_kernel_basis_maps_to_zero():
    F3 = GF(3)
    places = [finite_place(f) for f in monic_irreducibles(2, F3)]
    # bigger G forces a kernel: l(G) = 5 > n = 3 >= k
    spec = CodeSpec(F3, places, divisor_of(infinite_place(F3), 4))
    code = build(spec)
    assert len(code.kernel_basis) == code.rr_space.dimension - code.k
    assert code.kernel_basis
    for f in code.kernel_basis:
        assert not any(codeword(f, spec))


# -- degeneracy -------------------------------------------------------------


def test_is_degenerate_examples():
    F5 = GF(5)
    x = Poly.x(F5)
    Pinf = infinite_place(F5)
    G2, G5 = divisor_of(Pinf, 2), divisor_of(Pinf, 5)
    assert is_degenerate(RationalFunction.constant(F5, 3), G2)
    assert is_degenerate(RationalFunction(x ** 5 - x), G5)
    assert not is_degenerate(RationalFunction.x(F5), G2)
    with pytest.raises(ValueError):
        is_degenerate(RationalFunction(x ** 3), G2)


def test_space_nondegenerate_examples():
    F5 = GF(5)
    Pinf = infinite_place(F5)
    assert space_nondegenerate(divisor_of(Pinf, 2))
    assert not space_nondegenerate(Divisor(F5))
    assert not space_nondegenerate(divisor_of(Pinf, 5))


@pytest.mark.parametrize("q,r", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 2)])
def test_space_nondegenerate_against_elementwise_bruteforce(q, r):
    field = GF(q)
    G = divisor_of(infinite_place(field), r)
    rr = rr_basis(G)
    elements = [RationalFunction.constant(field, 0)]
    combos = [[]]
    for b in rr.basis:
        combos = [c + [e] for c in combos for e in field.elements()]
    elements = []
    for combo in combos:
        f = RationalFunction.constant(field, 0)
        for c, b in zip(combo, rr.basis):
            f = f + c * b
        elements.append(f)
    nonconst = [f for f in elements if not f.is_constant]
    expected = bool(nonconst) and not any(is_degenerate(f, G) for f in nonconst)
    assert space_nondegenerate(G) == expected


def test_degeneracy_with_finite_place_poles():
    # G supported at a finite place: h ranges over functions with poles there
    F5 = GF(5)
    x = Poly.x(F5)
    P = finite_place(x ** 2 + 2)
    G = divisor_of(P, 1)
    assert space_nondegenerate(G)
    f = rr_basis(G).basis[1]
    assert not is_degenerate(f, G)


# -- quasi-cyclic family -----------------------------------------------------


def test_qc_family_example_grid():
    grid, code = example_code()
    assert grid.alpha == 3 and grid.m == 2
    rows = [[str(f) for f in row] for row in grid.polynomial_rows()]
    assert rows == [
        ["x^2+2", "x^2+3"],
        ["x^2+x+1", "x^2+x+2"],
        ["x^2+2*x+3", "x^2+2*x+4"],
        ["x^2+3*x+3", "x^2+3*x+4"],
        ["x^2+4*x+1", "x^2+4*x+2"],
    ]
    assert code.n == 10 and code.k == 3


def test_qc_family_grid_structure():
    for p, d in ((3, 2), (5, 2), (2, 3), (3, 4)):
        grid, code = quasi_cyclic_family(p, d, 1)
        field = code.field
        alpha = grid.alpha
        # alpha inverts d mod p, i.e. the degree-d trace of alpha is 1
        assert field.elem(d) * alpha == 1
        rows = grid.polynomial_rows()
        assert len(rows) == p and all(len(r) == grid.m for r in rows)
        flat = [f for row in rows for f in row]
        assert len(set(flat)) == len(flat)
        assert set(flat) == set(monic_irreducibles(d, field))
        for i, row in enumerate(rows):
            for f in row:
                assert poly_trace(f) == field.elem(i)  # the trace ladder
        from tracecodes.polyring import shifted
        for i in range(p - 1):
            for f, g in zip(rows[i], rows[i + 1]):
                assert shifted(f, alpha) == g


def test_qc_family_m_from_enumeration():
    grid, code = quasi_cyclic_family(3, 2, 1)
    F3 = GF(3)
    oracle_m = sum(1 for f in monic_irreducibles(2, F3) if not poly_trace(f))
    assert grid.m == oracle_m == 1
    assert code.n == 3 * grid.m


def test_qc_family_zero_divisor():
    grid, code = quasi_cyclic_family(3, 2, 0)
    assert code.k == 1
    assert set(v.index for v in code.rows[0]) == {2}  # Tr(1) = d = 2


def test_qc_family_validation():
    with pytest.raises(ValueError, match=r"\(d, p\) = 1"):
        quasi_cyclic_family(2, 2, 1)
    with pytest.raises(ValueError):
        quasi_cyclic_family(4, 3, 1)


def test_shift_by_rows():
    assert shift_by_rows((1, 2, 3, 4), 2) == (3, 4, 1, 2)
    zeros = (0,) * 6
    assert shift_by_rows(zeros, 3) == zeros
    with pytest.raises(ValueError):
        shift_by_rows((1, 2, 3), 2)


def test_shift_invariance_of_qc_codes():
    for p, d, r in ((5, 2, 2), (3, 2, 1), (3, 4, 2)):
        grid, code = quasi_cyclic_family(p, d, r)
        red, piv = linalg.rref(code.rows, code.n, code.field)
        for row in code.rows:
            shifted_row = shift_by_rows(row, grid.m)
            assert linalg.in_row_space(red, piv, shifted_row)


# -- classical specialization -------------------------------------------------


@pytest.mark.parametrize("q", [4, 9])
def test_degree_one_specialization_equals_goppa(q):
    field = GF(q)
    places = [finite_place(f) for f in monic_irreducibles(1, field)]
    G = divisor_of(infinite_place(field), 2)
    spec = CodeSpec(field, places, G)
    code = build(spec)
    direct = goppa_rows(field, places, G)
    assert linalg.row_space_equal(code.rows, direct, code.n, field)
    # with degree-one places the per-place trace is the identity
    assert code.rows == direct


@pytest.mark.parametrize("q0,wild", [(3, False), (2, True)])
def test_residue_trace_matches_root_trace(q0, wild):
    # evaluate through the residue field and through a root in GF(q0^2):
    # the traces agree (trace is isomorphism-invariant), so tracing the
    # root-evaluated code gives exactly the trace code
    field = GF(q0)
    big = GF(q0 ** 2)
    places = [finite_place(f) for f in monic_irreducibles(2, field)]
    G = divisor_of(infinite_place(field), 2)
    spec = CodeSpec(field, places, G, allow_wild_degrees=wild)
    code = build(spec)
    roots = []
    for P in places:
        r = next(a for a in big.elements() if not P.poly(a))
        roots.append(r)
    rr = code.rr_space
    traced_rows = []
    for f in rr.basis:
        row = []
        for P, a in zip(places, roots):
            value = f.num(a) / f.den(a)
            row.append(trace_to_subfield(value, 2, q0))
        # entries live in the degree-2 field but lie in the base field
        from tracecodes.gf import to_base_field
        traced_rows.append(tuple(to_base_field(v) for v in row))
    assert traced_rows == list(code.rows)


def test_goppa_rows_rejects_higher_degree():
    F5 = GF(5)
    x = Poly.x(F5)
    with pytest.raises(ValueError, match="degree-one"):
        goppa_rows(F5, [finite_place(x ** 2 + 2)],
                   divisor_of(infinite_place(F5), 1))
