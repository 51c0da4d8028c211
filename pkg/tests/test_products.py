import random
from fractions import Fraction

import pytest

from oracles import m_chain, n_chain, product_n_chain_direct

from frcodes import (
    ParameterError,
    ProductSpec,
    complete_graph_code,
    dual,
    from_blocks,
    full_hierarchy,
    gfr,
    gfr_hierarchy,
    repeat_blocks,
    stretch_chain,
    tensor,
    tensor_hierarchy,
    trivial_code,
    validate_fr,
)

GFR_531_M = (4, 5, 6, 7, 8, 9, 10, 10, 11, 11, 13, 13, 14, 14, 14,
             16, 17, 17, 17, 17, 20, 20, 20, 20, 20)


def circulant_code(theta, alpha):
    """Blocks {i, i+1, ..., i+alpha-1} mod theta: an (theta, alpha, theta, alpha) code."""
    blocks = [{(i + j) % theta for j in range(alpha)} for i in range(theta)]
    return validate_fr(from_blocks(theta, blocks))


def test_grid_code_parameters():
    g = trivial_code(4)
    assert tensor(g, g).params == (8, 4, 16, 2)


def test_triple_tensor_parameters():
    g = trivial_code(3)
    assert tensor(tensor(g, g), g).params == (9, 9, 27, 3)


def test_tensor_with_single_node_full_code():
    # the (1, theta, theta, 1) full code has ratio 1, so the partner must too
    code = validate_fr(from_blocks(2, [{0, 1}, {0, 1}]))  # (2, 2, 2, 2)
    single = validate_fr(from_blocks(2, [{0, 1}]))  # (1, 2, 2, 1)
    product = tensor(code, single)
    assert product.params == (code.n + 1, code.alpha * 2, code.theta * 2, code.rho + 1)


def test_tensor_ratio_mismatch():
    with pytest.raises(ParameterError):
        tensor(trivial_code(3), complete_graph_code(4))


def test_tensor_parameter_law_and_eq5():
    pairs = [
        (trivial_code(2), complete_graph_code(4)),
        (circulant_code(4, 2), complete_graph_code(4)),
        (trivial_code(3), circulant_code(6, 2)),
    ]
    for c1, c2 in pairs:
        product = tensor(c1, c2)
        assert product.params == (
            c1.n + c2.n,
            c1.alpha * c2.theta,
            c1.theta * c2.theta,
            c1.rho + c2.rho,
        )
        assert product.n * product.alpha == product.theta * product.rho


def test_tensor_commutativity_params_and_hierarchy():
    pairs = [
        (trivial_code(2), complete_graph_4_half := complete_graph_code(4)),
        (circulant_code(4, 2), complete_graph_4_half),
        (trivial_code(3), circulant_code(6, 2)),
    ]
    for c1, c2 in pairs:
        p12 = tensor(c1, c2)
        p21 = tensor(c2, c1)
        assert p12.params == p21.params
        assert m_chain(p12) == m_chain(p21)


def test_tensor_associativity_bit_exact():
    # row-major pair indexing makes both association orders identical
    c1 = trivial_code(2)
    c2 = circulant_code(4, 2)
    c3 = complete_graph_code(4)
    left = tensor(tensor(c1, c2), c3)
    right = tensor(c1, tensor(c2, c3))
    assert left.structure.matrix_rows() == right.structure.matrix_rows()


def test_repeat_blocks_identity_fold():
    code = complete_graph_code(4)
    assert repeat_blocks(code, 1) is code


def test_repeat_blocks_trivial():
    folded = repeat_blocks(trivial_code(4), 3)
    assert folded.params == (12, 1, 4, 3)
    assert folded.blocks[:3] == ((0,), (0,), (0,))


def test_repeat_blocks_rejects_zero():
    with pytest.raises(ParameterError):
        repeat_blocks(trivial_code(2), 0)


def test_folded_chain_law():
    for code in (trivial_code(3), complete_graph_code(4), circulant_code(5, 2)):
        base = n_chain(code)
        for e in (2, 3):
            folded = repeat_blocks(code, e)
            chain = n_chain(folded)
            assert chain == tuple(base[-(-k // e)] for k in range(e * code.n + 1))
            assert chain == stretch_chain(base, e)


def test_tensor_hierarchy_grid2():
    chain = tensor_hierarchy((2, 1, 0), (2, 1, 0))
    assert chain == (4, 2, 1, 0, 0)
    g = trivial_code(2)
    assert n_chain(tensor(g, g)) == chain


def test_tensor_hierarchy_endpoint():
    chain = tensor_hierarchy((3, 2, 1, 0), (2, 1, 0))
    assert chain[-1] == 0
    assert chain[0] == 6


def test_tensor_hierarchy_rejects_malformed():
    with pytest.raises(ParameterError):
        tensor_hierarchy((2, 2, 0), (2, 1, 0))  # no strict first drop
    with pytest.raises(ParameterError):
        tensor_hierarchy((2, 1, 1), (2, 1, 0))  # does not end at 0
    with pytest.raises(ParameterError):
        tensor_hierarchy((2, 0, 1), (2, 1, 0))  # increases


def _ratio_pool():
    half = [
        trivial_code(2),
        circulant_code(4, 2),
        circulant_code(6, 3),
        complete_graph_code(4),
    ]
    third = [trivial_code(3), circulant_code(6, 2), circulant_code(9, 3)]
    fifth = [trivial_code(5), circulant_code(5, 1)]
    return [half, third, fifth]


def test_tensor_hierarchy_randomized_pairs_against_enumeration():
    rng = random.Random(20240817)
    pools = _ratio_pool()
    checked = 0
    while checked < 10:
        pool = rng.choice(pools)
        c1 = rng.choice(pool)
        c2 = rng.choice(pool)
        if c1.n + c2.n > 14 or c1.theta * c2.theta > 40:
            continue
        product = tensor(c1, c2)
        expected = n_chain(product)
        got = tensor_hierarchy(n_chain(c1), n_chain(c2))
        assert got == expected, (c1.params, c2.params)
        checked += 1


def test_product_spec_params_law():
    rng = random.Random(7)
    pools = _ratio_pool()
    for _ in range(6):
        pool = rng.choice(pools)
        s = rng.randint(1, 3)
        factors = tuple((rng.choice(pool), rng.randint(1, 2)) for _ in range(s))
        spec = ProductSpec(factors)
        n = sum(e * c.n for c, e in factors)
        theta = 1
        for c, _ in factors:
            theta *= c.theta
        rho = sum(e * c.rho for c, e in factors)
        ratio = Fraction(factors[0][0].alpha, factors[0][0].theta)
        expected = (n, int(ratio * theta), theta, rho)
        assert spec.params() == expected
        if theta <= 40 and n <= 14:
            assert spec.build().params == expected


def test_product_spec_ratio_mismatch():
    with pytest.raises(ParameterError):
        ProductSpec(((trivial_code(2), 1), (trivial_code(3), 1)))


def test_product_spec_chain_matches_direct_oracle():
    rng = random.Random(99)
    pools = _ratio_pool()
    cases = 0
    while cases < 6:
        pool = rng.choice(pools)
        s = rng.randint(2, 3)
        factors = tuple((rng.choice(pool), rng.randint(1, 2)) for _ in range(s))
        spec = ProductSpec(factors)
        n, _, theta, _ = spec.params()
        if n > 16 or theta > 64:
            continue
        chains = [n_chain(c) for c, _ in factors]
        folds = [e for _, e in factors]
        assert spec.n_chain() == product_n_chain_direct(chains, folds)
        cases += 1


def test_product_spec_chain_matches_enumeration():
    spec = ProductSpec(((trivial_code(3), 2), (trivial_code(3), 1)))
    assert spec.n_chain() == n_chain(spec.build())


def test_gfr_531():
    code = gfr(5, [3, 1])
    assert code.params == (25, 4, 20, 5)
    h = gfr_hierarchy(5, [3, 1])
    assert h.m_values[1:] == GFR_531_M
    assert h.n_values == tuple(20 - m for m in h.m_values)


def test_gfr_single_factor_is_relabeled_trivial():
    code = gfr(4, [1])
    assert code.params == (4, 1, 4, 1)
    assert code.structure.matrix_rows() == trivial_code(4).structure.matrix_rows()


def test_gfr_is_dual_of_folded_product():
    g = trivial_code(3)
    spec = ProductSpec(((g, 2), (g, 1)))
    assert gfr(3, [2, 1]).structure.matrix_rows() == dual(
        spec.build()
    ).structure.matrix_rows()


def test_gfr_rejects_bad_args():
    with pytest.raises(ParameterError):
        gfr(1, [2])
    with pytest.raises(ParameterError):
        gfr(3, [])
    with pytest.raises(ParameterError):
        gfr(3, [0])


def test_gfr_hierarchy_matches_enumeration_small():
    h = gfr_hierarchy(3, [2, 1])
    code = gfr(3, [2, 1])
    assert h.m_values == full_hierarchy(code, via_dual=False).m_values
