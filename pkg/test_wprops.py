"""
Test column W, column W0, R0-W and SSM-W checkers and the tuple transforms
"""

import sys
import os
from fractions import Fraction

import pytest

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from exactmath import Mat, det
from harness.fixtures import (
    identity_pair_tuple, non_r0_w_tuple, p_members_not_ssm_w_tuple, ssm_w_not_column_w_tuple
)
from matclass import is_P
from model import MatrixTuple, SolutionTuple, Verdict
from utils.errors import InputFormatError, InvalidDiagonalError, InvalidPermutationError
from wprops import (
    collapse_from_column_w_failure, collapse_from_ssm_w_witness, column_w, column_w0,
    column_w_diag_probe, diagonal_collapse, is_column_w_certificate, is_r0_w_witness,
    is_ssm_w_witness, normalize_tuple, permute_tuple, r0_w, representatives, ssm_w, tuple_properties
)


def test_representatives_enumeration():
    c = p_members_not_ssm_w_tuple()
    reps = representatives(c)
    assert len(reps) == 9
    assert reps[0].choices == (0, 0)
    assert reps[0].matrix == Mat.identity(2)


def test_column_w_yes_and_certificates():
    c = identity_pair_tuple()
    verdict = column_w(c)
    assert verdict.is_yes and verdict.certificate["sign"] == 1
    assert is_column_w_certificate(c, verdict)

    negative = MatrixTuple.from_lists([[[-1]], [[-2]]])
    assert column_w(negative).certificate["sign"] == -1


def test_column_w_opposite_signs():
    c = p_members_not_ssm_w_tuple()
    verdict = column_w(c)
    assert verdict.is_no
    assert verdict.certificate["kind"] == "opposite_signs"
    assert verdict.certificate["determinants"] == [1, -3]
    assert is_column_w_certificate(c, verdict)


def test_column_w_zero_determinant():
    c = ssm_w_not_column_w_tuple()
    verdict = column_w(c)
    assert verdict.certificate["kind"] == "zero_determinant"
    assert verdict.certificate["choices"] == [1, 1]
    assert is_column_w_certificate(c, verdict)


def test_diag_probe_finds_singular_member():
    verdict = column_w_diag_probe(ssm_w_not_column_w_tuple(), trials=0)
    assert verdict.is_no
    assert verdict.certificate["kind"] == "singular_diagonal_collapse"
    assert column_w_diag_probe(identity_pair_tuple(), trials=20, rng_seed=3).is_unknown


def test_column_w0():
    assert column_w0(identity_pair_tuple()).is_yes
    assert column_w0(p_members_not_ssm_w_tuple()).is_no

    # ([1], [0]): det of C + eps*I is 1 + eps and eps, positive for every eps > 0
    perturbed = column_w0(non_r0_w_tuple())
    assert perturbed.is_yes and perturbed.certificate["exact"] is True

    # ([0], [0]) with N = ([1], [-1]) mixes signs at every eps
    zero = MatrixTuple.from_lists([[[0]], [[0]]])
    bad_n = MatrixTuple.from_lists([[[1]], [[-1]]])
    assert column_w0(zero, n_candidates=[bad_n]).is_unknown

    with pytest.raises(InputFormatError):
        column_w0(zero, eps_grid=["1/10", "1"])
    with pytest.raises(InputFormatError):
        column_w0(zero, eps_grid=[0])


def test_r0_w():
    assert r0_w(identity_pair_tuple()).is_yes
    c = non_r0_w_tuple()
    verdict = r0_w(c)
    assert verdict.is_no
    assert verdict.certificate["support"] == []
    assert is_r0_w_witness(c, verdict.certificate["witness"])


def test_ssm_w():
    assert ssm_w(ssm_w_not_column_w_tuple()).is_yes
    c = p_members_not_ssm_w_tuple()
    verdict = ssm_w(c)
    assert verdict.is_no
    assert is_ssm_w_witness(c, verdict.certificate["witness"])
    assert is_ssm_w_witness(c, SolutionTuple(((-1, -1), (0, 1), (1, 0))))
    # normalized members are both P matrices
    assert all(is_P(m).is_yes for m in normalize_tuple(c).trailing)


def test_tuple_properties_report():
    verdicts = tuple_properties(ssm_w_not_column_w_tuple())
    assert {name: v.status.value for name, v in verdicts.items()} == {
        "column_w": "No", "column_w0": "Yes", "r0_w": "Yes", "ssm_w": "Yes"
    }


def test_normalize_and_permute():
    c = MatrixTuple.from_lists([[[2, 0], [0, 1]], [[2, 4], [1, 1]]])
    normalized = normalize_tuple(c)
    assert normalized.c0 == Mat.identity(2)
    assert normalized[1] == Mat.from_rows([[1, 2], [1, 1]])

    swapped = permute_tuple(c, [1, 0])
    assert swapped[1] == Mat.from_rows([[1, 1], [4, 2]])
    assert column_w(swapped).status == column_w(c).status
    with pytest.raises(InvalidPermutationError):
        permute_tuple(c, [0, 0])


def test_diagonal_collapse_validation():
    c = p_members_not_ssm_w_tuple()
    pair = diagonal_collapse(c, [[1, 0], [0, 1]])
    assert pair.k == 1
    assert pair[1] == Mat.from_rows([[1, 0], [0, 1]])
    with pytest.raises(InvalidDiagonalError):
        diagonal_collapse(c, [[1, 0], [0, 0]])
    with pytest.raises(InvalidDiagonalError):
        diagonal_collapse(c, [[-1, 1], [1, 1]])
    with pytest.raises(InvalidDiagonalError):
        diagonal_collapse(c, [[1, 1]])


def test_collapse_from_ssm_w_witness_fails_ssm_w():
    c = p_members_not_ssm_w_tuple()
    witness = ssm_w(c).certificate["witness"]
    collapse = collapse_from_ssm_w_witness(c, witness)
    assert ssm_w(collapse.collapsed).is_no
    assert is_ssm_w_witness(collapse.collapsed, collapse.witness)


def test_collapse_from_column_w_failure():
    for c in (p_members_not_ssm_w_tuple(), ssm_w_not_column_w_tuple()):
        verdict = column_w(c)
        collapse = collapse_from_column_w_failure(c, verdict)
        assert column_w(collapse.collapsed).is_no
        assert all(d.is_diagonal() for d in collapse.diagonals)

    # weighted case: both representatives use trailing members only
    c = MatrixTuple.from_lists([[[1]], [[1]], [[-1]]])
    verdict = Verdict.no("column_w", kind="opposite_signs", choices=[[1], [2]])
    collapse = collapse_from_column_w_failure(c, verdict)
    assert det(collapse.collapsed[1]) == 0
    assert collapse.diagonals[0].diag() == (Fraction(1, 2),)
