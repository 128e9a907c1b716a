import itertools
import random

import pytest

from tracecodes.gf import GF
from tracecodes.codeanalysis import (LinearCode, MixedCode, analyze,
                                     check_delsarte, min_distance,
                                     quasicyclic_index, restrict_subfield,
                                     sigma, sigma_image, support_partition,
                                     trace_dual, weight_distribution)
from tracecodes.funcfield import RationalFunction, divisor_of, infinite_place
from tracecodes.tracecode import quasi_cyclic_family

# frozen from the brute-force oracle below on first computation
EXAMPLE_3_6_WEIGHTS = {0: 1, 7: 40, 8: 60, 10: 24}


def naive_weights(field, rows):
    """Oracle: collect the distinct codewords of the span with plain field
    arithmetic (no tables, no rank reduction), then histogram weights."""
    n = len(rows[0])
    span = set()
    for combo in itertools.product(list(field.elements()), repeat=len(rows)):
        acc = [field.zero()] * n
        for c, row in zip(combo, rows):
            if c:
                acc = [a + c * v for a, v in zip(acc, row)]
        span.add(tuple(v.index for v in acc))
    hist = {}
    for word in span:
        w = sum(1 for v in word if v)
        hist[w] = hist.get(w, 0) + 1
    return hist


@pytest.fixture(scope="module")
def example():
    grid, code = quasi_cyclic_family(5, 2, 2)
    return grid, code


def test_example_weight_distribution_frozen(example):
    grid, code = example
    lin = LinearCode(code.field, code.rows)
    dist = weight_distribution(lin)
    assert dist == EXAMPLE_3_6_WEIGHTS
    assert dist == naive_weights(code.field, code.rows)
    assert sum(dist.values()) == 5 ** 3


def test_example_min_distance(example):
    grid, code = example
    lin = LinearCode(code.field, code.rows)
    assert min_distance(lin) == 7


def test_min_distance_of_repetition_code():
    F3 = GF(3)
    lin = LinearCode(F3, [tuple(F3.one() for _ in range(6))])
    assert min_distance(lin) == 6
    assert weight_distribution(lin) == {0: 1, 6: 2}


def test_weight_distribution_workers_agree(example):
    grid, code = example
    lin = LinearCode(code.field, code.rows)
    assert weight_distribution(lin, workers=3) == EXAMPLE_3_6_WEIGHTS


def test_weight_distribution_random_against_naive():
    rng = random.Random(99)
    for q in (2, 3, 4):
        field = GF(q)
        elems = list(field.elements())
        for _ in range(4):
            k, n = rng.randint(1, 3), rng.randint(2, 6)
            rows = [tuple(rng.choice(elems) for _ in range(n)) for _ in range(k)]
            lin = LinearCode(field, rows)
            assert weight_distribution(lin) == naive_weights(field, rows)


def test_zero_code_analysis():
    F5 = GF(5)
    lin = LinearCode(F5, [(F5.zero(), F5.zero())], n=2)
    assert lin.k == 0
    with pytest.raises(ValueError):
        min_distance(lin)
    assert weight_distribution(lin) == {0: 1}


def test_min_distance_consistency_with_distribution(example):
    grid, code = example
    lin = LinearCode(code.field, code.rows)
    dist = weight_distribution(lin)
    assert min_distance(lin) == min(w for w in dist if w > 0)


def test_singleton_bound(example):
    grid, code = example
    an = analyze(code.field, code.rows)
    assert an.d <= an.n - an.k + 1
    assert an.singleton_defect == 1  # near-MDS: d = n - k


def test_quasicyclic_index(example):
    grid, code = example
    lin = LinearCode(code.field, code.rows)
    idx = quasicyclic_index(lin)
    assert 2 in idx and code.n in idx
    F3 = GF(3)
    rep = LinearCode(F3, [tuple(F3.one() for _ in range(6))])
    assert quasicyclic_index(rep) == (1, 2, 3, 6)
    # an explicit non-cyclic code: only the full shift survives
    skew = LinearCode(F3, [(F3.one(), F3.elem(2), F3.zero(), F3.zero())])
    assert quasicyclic_index(skew) == (4,)


def test_analyze_json_shape(example):
    grid, code = example
    doc = analyze(code.field, code.rows).to_json_dict()
    assert set(doc) == {"n", "k", "d", "weight_distribution", "qc_indices",
                        "singleton_defect"}
    assert doc["weight_distribution"]["7"] == 40


# -- mixed-alphabet codes ------------------------------------------------------


def mixed_profile_fields(field, profile):
    return tuple(field if b == 1 else field.extend(degree=b) for b in profile)


def random_mixed_code(field, profile, rng):
    coord_fields = mixed_profile_fields(field, profile)
    width = sum(profile)
    k = rng.randint(0, width)
    rows = [tuple(field.from_index(rng.randrange(field.order))
                  for _ in range(width)) for _ in range(k)]
    return MixedCode(field, coord_fields, rows)


def test_sigma_examples():
    F5 = GF(5)
    F25 = F5.extend(degree=2)
    t = F25.generator()
    assert sigma((F25.one(), F25.one()), F5) == (F5.elem(2), F5.elem(2))
    assert sigma((F25.zero(), F25.zero()), F5) == (F5.zero(), F5.zero())
    assert sigma((t, F25.zero()), F5) == (F5.zero(), F5.zero())
    assert sigma((F5.one(), t), F5) == (F5.one(), F5.zero())


def test_trace_dual_examples():
    F5 = GF(5)
    F25 = F5.extend(degree=2)
    full = MixedCode(F5, (F25, F25), [
        tuple(F5.one() if i == j else F5.zero() for i in range(4))
        for j in range(4)])
    assert trace_dual(full).k == 0
    zero = MixedCode(F5, (F25, F25), [])
    assert trace_dual(zero).k == 4
    line = MixedCode.from_coordinate_vectors(F5, (F25,), [(F25.one(),)])
    dual = trace_dual(line)
    assert dual.k == 1
    # the dual of GF(5)*1 under <u,v> = Tr(uv) is the trace kernel
    from tracecodes.gf import trace_to_subfield
    for vec in dual.coordinate_vectors():
        assert not trace_to_subfield(vec[0], 2, 5)


def test_trace_dual_dimension_and_involution():
    rng = random.Random(1234)
    for q in (2, 3, 5):
        field = GF(q)
        for profile in ((2, 2), (2, 3), (1, 2, 2)):
            for _ in range(5):
                C = random_mixed_code(field, profile, rng)
                D = trace_dual(C)
                assert C.k + D.k == C.width
                assert trace_dual(D).row_space_equal(C)


def test_restrict_subfield_examples():
    F5 = GF(5)
    F25 = F5.extend(degree=2)
    t = F25.generator()
    full = MixedCode(F5, (F25, F25), [
        tuple(F5.one() if i == j else F5.zero() for i in range(4))
        for j in range(4)])
    assert restrict_subfield(full).k == 2
    line_t = MixedCode.from_coordinate_vectors(F5, (F25, F25), [(t, t)])
    assert restrict_subfield(line_t).k == 0
    rep = MixedCode.from_coordinate_vectors(F5, (F25, F25),
                                            [(F25.one(), F25.one())])
    restr = restrict_subfield(rep)
    assert restr.k == 1 and restr.contains((F5.one(), F5.one()))


def test_delsarte_duality_examples():
    F3 = GF(3)
    # beta = (1, 1): the classical statement
    C = MixedCode(F3, (F3, F3), [(F3.one(), F3.elem(2))])
    chk = check_delsarte(C)
    assert chk.duality_equal and chk.corollary_holds
    F25 = GF(5).extend(degree=2)
    zero = MixedCode(GF(5), (F25, F25), [])
    chk0 = check_delsarte(zero)
    assert chk0.duality_equal
    assert chk0.dim_sigma_image == 0


def test_delsarte_duality_random_sweep():
    rng = random.Random(2024)
    count = 0
    for q in (2, 3, 5):
        field = GF(q)
        for profile in ((2, 2), (2, 3), (1, 2, 2)):
            for _ in range(12):
                C = random_mixed_code(field, profile, rng)
                chk = check_delsarte(C)
                assert chk.duality_equal
                assert chk.corollary_holds
                count += 1
    assert count == 108


def test_delsarte_guard():
    F2 = GF(2)
    F4 = F2.extend(degree=2)
    wide = MixedCode(F2, (F4,) * 8, [])
    with pytest.raises(ValueError, match="guard"):
        check_delsarte(wide)


def test_support_partition(example):
    grid, code = example
    F5 = code.field
    f = RationalFunction.x(F5)
    part = support_partition(f, code)
    assert len(part.nonzero) == 8 and part.weight == 8
    assert len(part.nonzero) + len(part.zero) == code.n
    zero = support_partition(RationalFunction.constant(F5, 0), code)
    assert not zero.nonzero and len(zero.zero) == code.n
    ones = support_partition(RationalFunction.constant(F5, 1), code)
    assert len(ones.nonzero) == code.n
