import json

import pytest

from oracles import m_chain, n_chain

from frcodes import (
    DesignError,
    FormatError,
    ParameterError,
    block_count,
    check_design_optimality,
    design_7_4_2,
    design_from_json_text,
    design_hierarchy,
    design_to_fr,
    dual,
    fano_plane,
    from_blocks,
    intersection_number,
    min_reconstruction_degree,
    prism_code,
    verify_t_design,
)


def brute_intersection_count(design, contained, avoided):
    """Count blocks containing `contained` fixed points and avoiding `avoided`
    others, over every disjoint (X, Y) choice; all choices must agree."""
    from itertools import combinations

    counts = set()
    points = range(design.v)
    for xs in combinations(points, contained):
        rest = [p for p in points if p not in xs]
        for ys in combinations(rest, avoided):
            c = sum(
                1
                for block in design.structure.blocks
                if set(xs) <= set(block) and not set(ys) & set(block)
            )
            counts.add(c)
    assert len(counts) == 1
    return counts.pop()


def test_intersection_number_biplane():
    assert intersection_number(2, 7, 4, 2, 1, 0) == 4
    assert intersection_number(2, 7, 4, 2, 2, 0) == 2  # i = t gives lambda
    assert intersection_number(2, 7, 3, 1, 0, 1) == 4  # Fano, one avoided point


def test_intersection_number_range_checks():
    with pytest.raises(ParameterError):
        intersection_number(2, 7, 4, 2, 2, 1)
    with pytest.raises(ParameterError):
        intersection_number(2, 7, 4, 2, -1, 0)


def test_intersection_number_agrees_with_brute_force():
    for design in (design_7_4_2(), fano_plane()):
        for i in range(design.t + 1):
            for j in range(design.t - i + 1):
                assert design.intersection_number(i, j) == brute_intersection_count(
                    design, i, j
                ), (design.v, design.m, i, j)


def test_pascal_identity():
    for design in (design_7_4_2(), fano_plane()):
        for i in range(design.t):
            for j in range(design.t - i):
                assert design.intersection_number(i, j) == design.intersection_number(
                    i + 1, j
                ) + design.intersection_number(i, j + 1)


def test_block_count():
    assert block_count(2, 7, 4, 2) == 7
    assert block_count(2, 7, 3, 1) == 7
    assert block_count(1, 10, 5, 2) == 4  # t=1: b = lambda * v / m


def test_block_count_non_integral():
    with pytest.raises(DesignError):
        block_count(2, 8, 3, 1)


def test_verify_biplane():
    d = design_7_4_2()
    assert (d.v, d.m, d.t, d.lam, d.b) == (7, 4, 2, 2, 7)


def test_verify_fano():
    d = fano_plane()
    assert (d.v, d.m, d.t, d.lam, d.b) == (7, 3, 2, 1, 7)


def test_verify_rejects_non_design():
    # the prism structure has constant block size but unequal pair counts
    with pytest.raises(DesignError):
        verify_t_design(prism_code().structure, 2)


def test_verify_rejects_repeated_blocks():
    with pytest.raises(DesignError):
        verify_t_design(from_blocks(2, [{0, 1}, {0, 1}]), 1)


def test_verify_rejects_non_constant_size():
    with pytest.raises(DesignError):
        verify_t_design(from_blocks(3, [{0, 1}, {2}]), 1)


def test_verify_caps():
    with pytest.raises(ParameterError):
        verify_t_design(from_blocks(4, [{0, 1}, {2, 3}]), 5)


def test_design_to_fr():
    assert design_to_fr(design_7_4_2()).params == (7, 4, 7, 4)
    assert design_to_fr(fano_plane()).params == (7, 3, 7, 3)


def test_one_design_rho_is_lambda():
    structure = from_blocks(4, [{0, 1}, {2, 3}, {0, 2}, {1, 3}])
    d = verify_t_design(structure, 1)
    assert d.lam == 2
    assert design_to_fr(d).rho == 2


def test_dual_complementary_chain_equals_avoided_counts():
    # N_l of the transpose equals the count of blocks avoiding l points
    for design in (design_7_4_2(), fano_plane()):
        code = design_to_fr(design)
        chain = n_chain(dual(code))
        for ell in range(1, design.t + 1):
            assert chain[ell] == design.intersection_number(0, ell), (design.m, ell)


def test_design_hierarchy_biplane():
    predicted = design_hierarchy(design_7_4_2())
    assert predicted == {2: 6, 3: 6, 4: 7, 5: 7, 6: 7, 7: 7}


def test_design_hierarchy_fano():
    predicted = design_hierarchy(fano_plane())
    assert predicted == {3: 6, 4: 6, 5: 7, 6: 7, 7: 7}


def test_design_hierarchy_matches_enumeration():
    for design in (design_7_4_2(), fano_plane()):
        code = design_to_fr(design)
        chain = m_chain(code)
        predicted = design_hierarchy(design)
        no_claim_cap = design.intersection_number(0, design.t)
        for k in range(1, code.n + 1):
            if k <= no_claim_cap:
                assert k not in predicted
            else:
                assert predicted[k] == chain[k], (design.m, k)
        assert predicted[design.b] == design.v


def test_optimality_biplane_and_fano():
    for design in (design_7_4_2(), fano_plane()):
        report = check_design_optimality(design)
        assert report.all_attained
        sizes = [row.file_size for row in report.rows]
        assert sizes == list(range(design.v - design.t + 1, design.v + 1))
        # smallest k reaching M = v is the count of blocks avoiding one
        # point, plus one
        full_row = report.rows[-1]
        assert full_row.file_size == design.v
        assert full_row.smallest_k == design.intersection_number(0, 1) + 1
        for row in report.rows:
            ell = design.v - row.file_size
            assert row.degree_bound == design.intersection_number(0, ell + 1) + 1
            assert row.degree_bound == min_reconstruction_degree(
                design.b, design.m, design.v, row.file_size
            )


def test_design_json_round_trip(tmp_path):
    design = fano_plane()
    payload = {
        "theta": design.v,
        "blocks": [list(b) for b in design.structure.blocks],
        "t": design.t,
    }
    loaded = design_from_json_text(json.dumps(payload))
    assert (loaded.v, loaded.m, loaded.t, loaded.lam) == (7, 3, 2, 1)


def test_design_json_requires_t():
    with pytest.raises(FormatError):
        design_from_json_text('{"theta": 3, "blocks": [[0], [1], [2]]}')
