"""
Test matrix class predicates and their certificates
"""

import sys
import os

import pytest

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from exactmath import Mat
from matclass import (
    classify, is_M_matrix, is_P, is_P_by_sign_patterns, is_R0, is_SSM, is_Z, is_p_witness,
    is_r0_witness, is_ssm_witness, supports
)
from utils.errors import DimensionError
from utils.rng import make_rng


def test_supports_order():
    assert supports(2) == [(0,), (1,), (0, 1)]
    assert supports(2, include_empty=True)[0] == ()


def test_z_matrix():
    assert is_Z(Mat.from_rows([[2, -1], [0, 3]]))
    assert not is_Z(Mat.from_rows([[2, 1], [0, 3]]))
    with pytest.raises(DimensionError):
        is_Z(Mat.from_rows([[1, 2]]))


def test_p_matrix_verdicts():
    assert is_P(Mat.from_rows([[2, -1], [-1, 2]])).is_yes
    m = Mat.from_rows([[1, -2], [2, 1]])
    assert is_P(m).is_yes

    not_p = Mat.from_rows([[1, 2], [2, 1]])
    verdict = is_P(not_p)
    assert verdict.is_no
    assert verdict.certificate["minor_indices"] == [0, 1]
    assert verdict.certificate["minor"] == -3
    assert is_p_witness(not_p, verdict.certificate["witness"])


def test_p_tests_agree():
    samples = [
        [[1, 0], [0, 1]],
        [[0, 1], [-1, 0]],
        [[1, 3], [0, 1]],
        [[-1, 0], [0, 2]],
        [[3, -1, 0], [2, 2, 1], [0, 1, 1]],
    ]
    for rows in samples:
        m = Mat.from_rows(rows)
        assert is_P(m).status == is_P_by_sign_patterns(m).status


def test_ssm_matrix():
    assert is_SSM(Mat.from_rows([[1, 5], [-5, 1]])).is_yes
    # x = (1, 1): x * Mx = (0, 0)
    m = Mat.from_rows([[1, -1], [-1, 1]])
    verdict = is_SSM(m)
    assert verdict.is_no
    assert is_ssm_witness(m, verdict.certificate["witness"])
    assert is_SSM(Mat.from_rows([[0]])).is_no


def test_m_matrix():
    yes = is_M_matrix(Mat.from_rows([[2, -1], [-1, 2]]))
    assert yes.is_yes
    assert yes.certificate["inverse"] == Mat.from_rows([["2/3", "1/3"], ["1/3", "2/3"]])
    assert is_M_matrix(Mat.from_rows([[1, 1], [0, 1]])).certificate["reason"] == "not_z"
    assert is_M_matrix(Mat.from_rows([[1, -1], [-1, 1]])).certificate["reason"] == "singular"
    negative = is_M_matrix(Mat.from_rows([[-1, 0], [0, 1]]))
    assert negative.is_no and negative.certificate["reason"] == "negative_inverse_entry"


def test_r0_matrix():
    assert is_R0(Mat.identity(2)).is_yes
    m = Mat.from_rows([[0, 1], [0, 1]])
    verdict = is_R0(m)
    assert verdict.is_no
    assert verdict.certificate["support"] == [0]
    assert is_r0_witness(m, verdict.certificate["witness"])


def test_classify_report():
    report = classify(Mat.from_rows([[2, -1], [-1, 2]])).to_dict()
    assert set(report) == {"Z", "P", "M", "SSM", "R0"}
    assert all(v["status"] == "Yes" for v in report.values())

    report = classify(Mat.from_rows([[1, 2], [2, 1]])).to_dict()
    assert report["Z"]["status"] == "No"
    assert report["Z"]["certificate"] == {"entry": [0, 1], "value": 2}
    assert report["P"]["status"] == "No"


def _random_matrix(rng, n: int, z_pattern: bool) -> Mat:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(int(rng.integers(-1, 5)))
            elif z_pattern:
                row.append(int(rng.integers(-3, 1)))
            else:
                row.append(int(rng.integers(-3, 4)))
        rows.append(row)
    return Mat.from_rows(rows)


def test_p_matrices_are_strictly_semimonotone():
    rng = make_rng(21)
    p_count = 0
    for trial in range(60):
        m = _random_matrix(rng, 1 + trial % 3, z_pattern=False)
        if is_P(m).is_yes:
            p_count += 1
            assert is_SSM(m).is_yes
    assert p_count > 0


def test_z_matrices_are_p_exactly_when_ssm():
    rng = make_rng(22)
    outcomes = set()
    for trial in range(60):
        m = _random_matrix(rng, 1 + trial % 3, z_pattern=True)
        assert is_Z(m)
        p = is_P(m).is_yes
        assert p == is_SSM(m).is_yes
        outcomes.add(p)
    assert outcomes == {True, False}
