# -*- coding: utf-8 -*-
import os
from unittest.mock import patch

import pytest

from chaospu.exceptions import InvalidInput, ResourceLimitExceeded
from chaospu.gysin import gysin_image
from chaospu.intlinalg import AbelianGroup
from chaospu.koszul.chains import E2Element, cstar_chain, d2, \
    elementary_cocycle, order_witness, rho_cocycle, split_t0, x1_chain
from chaospu.koszul.coinvariants import coinvariant_ring, elementary, \
    re_expand, taylor_expand
from chaospu.koszul.pages import check_oracle_bound, e3_page, \
    koszul_complex, oracle_theta, oracle_theta_sign, total_degree_groups, \
    verify_gysin
from chaospu.koszul.probes import cocycle_check, coinvariant_rank_check, \
    differential_squares_to_zero, gysin_oracle_check, omega_order_check, \
    oracle_groups_agree, product_rule_check, restriction_coboundary_check, \
    top_class_check, unitary_page_check
from chaospu.multiindex import MultiIndex, index_set, subsets
from chaospu.presentation.groups import full_module


def test_coinvariant_ring_of_three():
    ring = coinvariant_ring(3)
    assert ring.rank() == 6
    assert ring.top_degree == 3
    assert ring.basis(0) == [(0, 0, 0)]
    assert ring.basis(3) == [(2, 1, 0)]
    assert ring.is_standard((2, 1, 0))
    assert not ring.is_standard((3, 0, 0))
    assert ring.x1_power(3) == {}
    for r in range(1, 4):
        assert ring.reduce(elementary(3, r)) == {}


def test_coinvariant_rank_is_factorial():
    assert coinvariant_rank_check(4)


def test_taylor_expansion_re_expands():
    poly = elementary(4, 2)
    parts = taylor_expand(poly, 4)
    assert len(parts) == 4
    assert re_expand(parts, 4) == poly


def test_taylor_expansion_refuses_bad_input():
    with pytest.raises(InvalidInput):
        taylor_expand({(0, 0, 0): 1}, 3)
    with pytest.raises(InvalidInput):
        taylor_expand({(1, 0, 0): 1, (2, 0, 0): 1}, 3)


def test_t0_does_not_live_on_the_projective_page():
    ring = coinvariant_ring(3)
    with pytest.raises(InvalidInput):
        E2Element.t(ring, False, 0)


def test_split_t0_moves_t0_to_the_end():
    ring = coinvariant_ring(3)
    x = E2Element.t(ring, True, 0) * E2Element.t(ring, True, 1)
    rest, theta = split_t0(x)
    assert not rest
    assert theta == -E2Element.t(ring, False, 1)


def test_lifts_are_cocycles():
    n = 3
    ring = coinvariant_ring(n)
    for r in range(1, n + 1):
        assert not d2(elementary_cocycle(n, r))
    for r in range(2, n + 1):
        assert not d2(rho_cocycle(n, r))
    witness = order_witness(n, 1)
    assert d2(witness) == x1_chain(ring, 1).scale(3)


def test_cocycle_report():
    checked = cocycle_check(4)
    assert checked["elementary"] == [1, 2, 3, 4]
    assert checked["rho"] == [2, 3, 4]


def test_differential_squares_to_zero():
    assert differential_squares_to_zero(3)
    assert differential_squares_to_zero(3, unitary=True)


def test_restriction_is_cstar_multiple_up_to_boundary():
    assert restriction_coboundary_check(4) == [2, 3, 4]
    assert restriction_coboundary_check(4, k=2) == [2]


def test_cstar_chain_needs_projective_page():
    with pytest.raises(InvalidInput):
        cstar_chain(elementary_cocycle(3, 1))


def test_unitary_page_is_free():
    assert unitary_page_check(3) == {0: 1, 1: 1, 3: 1, 4: 1, 5: 1, 6: 1,
                                     8: 1, 9: 1}


def test_omega_orders():
    assert omega_order_check(4) == {1: 4, 2: 2, 3: 2, 4: 1}


def test_top_class():
    assert top_class_check(3) in (1, -1)
    complex_ = koszul_complex(3, False)
    assert complex_.group(6, 2) == AbelianGroup(1)


def test_pu2_page_gives_real_projective_space():
    totals = total_degree_groups(e3_page(2))
    assert [totals.get(d, AbelianGroup(0)) for d in range(4)] == [
        AbelianGroup(1), AbelianGroup(0), AbelianGroup(0, (2,)),
        AbelianGroup(1)]


def test_representatives_are_cocycles():
    page = e3_page(3, representatives=True)
    for homology in page.values():
        for _, chain in homology.generators:
            assert not d2(chain)


@pytest.mark.parametrize("n", [
    2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_oracle_theta_matches_recursion_up_to_sign(n):
    for elements in subsets(index_set(n), min_size=1):
        assert oracle_theta_sign(n, MultiIndex(n, elements)) in (1, -1)


def test_oracle_theta_is_only_defined_modulo_relations():
    index = MultiIndex(3, (1, 3))
    value = oracle_theta(3, index)
    expected = gysin_image(3, index)
    assert full_module(3).contains(value - expected) or \
        full_module(3).contains(value + expected)
    assert oracle_theta_sign(3, index) in (1, -1)


def test_connecting_map_agrees_with_oracle():
    reports = gysin_oracle_check(3)
    assert len(reports) == 7
    assert all(report["match"] for report in reports)
    assert all(report["class_sign"] in (1, -1) for report in reports)
    assert verify_gysin(2, MultiIndex(2, (1, 2)))["sign"] in (1, -1)


def test_groups_agree_with_oracle():
    report = oracle_groups_agree(3)
    assert report[5] == {"expected": "Z+Z/3", "computed": "Z+Z/3",
                         "match": True}
    window = oracle_groups_agree(3, window=(0, 3))
    assert sorted(window) == [0, 1, 2, 3]


def test_product_rule_on_random_pairs():
    assert product_rule_check(3, seed=1, trials=5) == 5
    assert product_rule_check(2, seed=7, trials=3) == 3


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_cocycles_and_restrictions_up_to_six(n):
    checked = cocycle_check(n)
    assert checked["elementary"] == list(range(1, n + 1))
    assert checked["rho"] == list(range(2, n + 1))
    assert restriction_coboundary_check(n) == list(range(2, n + 1))


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_cocycles_with_a_raised_bound(n):
    checked = cocycle_check(n, configuration={"oracle_max_n": 8})
    assert checked["reduced"] == list(range(1, n + 1))
    assert checked["rho"] == list(range(2, n + 1))


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5, 6])
def test_connecting_map_agrees_with_oracle_up_to_six(n):
    reports = gysin_oracle_check(n)
    assert len(reports) == 2 ** n - 1
    assert all(report["class_sign"] in (1, -1) for report in reports)


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5, 6])
def test_groups_agree_with_oracle_up_to_six(n):
    report = oracle_groups_agree(n, jobs=2)
    assert all(row["match"] for row in report.values())
    assert report[n * n - 1]["computed"] == "Z"


@patch('chaospu.has_local_config_file', autospec=True)
def test_oracle_bound(has_conf):
    has_conf.return_value = False
    check_oracle_bound(6)
    with pytest.raises(ResourceLimitExceeded):
        check_oracle_bound(7)
    check_oracle_bound(7, configuration={"oracle_max_n": 7})
    check_oracle_bound(8, window=(0, 10))
    with pytest.raises(ResourceLimitExceeded):
        check_oracle_bound(9, window=(0, 10))
    with pytest.raises(InvalidInput):
        check_oracle_bound(1)


@patch('chaospu.has_local_config_file', autospec=True)
def test_oracle_bound_from_environment(has_conf):
    has_conf.return_value = False
    with patch.dict(os.environ, {"CHAOSPU_ORACLE_MAX_N": "3"}):
        with pytest.raises(ResourceLimitExceeded):
            check_oracle_bound(4)
