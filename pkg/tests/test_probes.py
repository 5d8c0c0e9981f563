# -*- coding: utf-8 -*-
from unittest.mock import patch

import pytest
from chaoslib.exceptions import ActivityFailed

from chaospu.exceptions import InternalInconsistency
from chaospu.presentation.probes import decomposition_shape_holds, \
    euler_characteristic_consistent, primary_form_agrees, \
    relation_generators_match, sanity_facts_hold, torsion_predictions_hold, \
    unitary_restriction_check
from chaospu.probes import binomial_gcd_factorization_holds, \
    closed_form_agrees, integrality_holds, kummer_valuations_hold, \
    prime_splitting_check, split_identity_holds, torsion_multiple_check


def test_binomial_gcd_factorization_holds():
    assert binomial_gcd_factorization_holds(64) == 64


@patch('chaospu.probes.check_binomial_gcd_factorization', autospec=True)
def test_broken_factorization_should_be_reported(check):
    check.return_value = False
    with pytest.raises(ActivityFailed) as excinfo:
        binomial_gcd_factorization_holds(4)
    assert "does not factor through c_k for n=2" in str(excinfo)


def test_split_identity_holds():
    # 2, 3, 4 (two splits), 5, 6 (two splits), 7, 8 (three splits)
    assert split_identity_holds(8) == 11


@patch('chaospu.probes.split_identity', autospec=True)
def test_failing_split_should_be_reported(split):
    split.side_effect = InternalInconsistency("C(4, 2) does not split")
    with pytest.raises(ActivityFailed) as excinfo:
        split_identity_holds(4)
    assert "does not split" in str(excinfo)


def test_kummer_valuations_hold():
    assert kummer_valuations_hold(64) == 64


def test_closed_form_agrees_on_eight():
    signs = closed_form_agrees(8)
    assert len(signs) == 11
    assert set(signs.values()) <= {1, -1}


def test_closed_form_agrees_on_twelve():
    signs = closed_form_agrees(12)
    # Q_2(12) = {1, 2, 4} and Q_3(12) = {1, 3}
    assert sorted(signs) == ["1,2", "1,2,4", "1,3", "1,4", "2,4"]


@pytest.mark.slow
@pytest.mark.parametrize("n,count", [(24, 11 + 1), (32, 57)])
def test_closed_form_agrees_on_acceptance_sizes(n, count):
    signs = closed_form_agrees(n)
    assert len(signs) == count
    assert set(signs.values()) <= {1, -1}


def test_integrality_holds():
    assert integrality_holds(6) == 2 ** 6 - 1


def test_prime_splitting_on_six():
    cases = prime_splitting_check(6)
    assert "1,2,3" in cases
    assert "2,3" in cases


def test_torsion_multiples_on_eight():
    assert torsion_multiple_check(8) == ["2", "4", "8", "2,4", "2,8", "4,8",
                                         "2,4,8"]


def test_sanity_facts_hold():
    report = sanity_facts_hold(4)
    assert report["top_degree_is_Z"]
    assert report["degree_2_is_Z_n"]


@patch('chaospu.presentation.probes.sanity_suite', autospec=True)
def test_failed_sanity_should_be_reported(suite):
    suite.return_value = {"top_degree_is_Z": False, "degree_3_is_Z": True}
    with pytest.raises(ActivityFailed) as excinfo:
        sanity_facts_hold(2)
    assert "top_degree_is_Z" in str(excinfo)


def test_primary_form_agrees():
    groups = primary_form_agrees(4)
    assert groups[5] == "Z+Z/2"


def test_relation_generators_match():
    assert len(relation_generators_match(8)) == 11


@pytest.mark.slow
@pytest.mark.parametrize("n,count", [(4, 4), (9, 4), (16, 26), (27, 11)])
def test_relation_generators_match_on_prime_powers(n, count):
    assert len(relation_generators_match(n)) == count


def test_torsion_predictions_hold():
    assert torsion_predictions_hold(6, 20) == {2: list(range(21)),
                                                 3: list(range(21))}


def test_euler_characteristic_consistent():
    assert all(euler_characteristic_consistent(4).values())


def test_unitary_restriction_check():
    report = unitary_restriction_check(4)
    assert report["checked"] == 7
    assert report["special_unitary_rank"] == 8


@patch('chaospu.has_local_config_file', autospec=True)
def test_decomposition_shape_holds(has_conf):
    has_conf.return_value = False
    report = decomposition_shape_holds(9, configuration={"max_degree": 30})
    assert report["match"]
    assert max(report["free"]) == 30
