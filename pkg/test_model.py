"""
Test instances, complementarity checks, branch systems and the JSON codec
"""

import sys
import os
import json
from fractions import Fraction

import pytest

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from exactmath import Mat
from harness.fixtures import chain_instance, diagonal_hlcp_instance, two_point_instance
from model import (
    Branch, Instance, MatrixTuple, SolutionTuple, Verdict, VerdictStatus, as_lcp, branch_constraints,
    branches, check_chain_lemma, check_complementarity, dumps, equation_residual, instance_from_dict,
    instance_to_dict, lcp_solution_to_tuple, matrix_tuple_from_dict, solution_tuple_from_dict,
    solution_tuple_to_dict, stacked_index, verify_solution
)
from utils.errors import ContractError, DimensionError, InputFormatError, InvalidInstanceError
from utils.rng import make_rng


def test_complementarity_forms():
    assert check_complementarity([0, 2], [3, 0])
    assert not check_complementarity([1, 0], [1, 0])
    assert not check_complementarity([-1, 0], [0, 0])
    assert check_complementarity([0], [0])
    with pytest.raises(DimensionError):
        check_complementarity([0], [0, 1])


def test_instance_validation():
    c = MatrixTuple.from_lists([[[1]], [[1]], [[1]]])
    with pytest.raises(InvalidInstanceError):
        Instance(c, ((0,),), (1,))
    with pytest.raises(InvalidInstanceError):
        Instance(c, (), (1,))
    with pytest.raises(DimensionError):
        Instance(c, ((1,),), (1, 2))
    with pytest.raises(DimensionError):
        MatrixTuple.from_lists([[[1, 0], [0, 1]], [[1]]])
    inst = Instance.with_unit_bounds(c, [2])
    assert inst.d == ((1,),)
    assert inst.with_q([5]).q == (5,)


def test_verify_known_solutions():
    inst = diagonal_hlcp_instance()
    good = SolutionTuple(((1, 0), (0, 1)))
    assert verify_solution(inst, good)
    assert equation_residual(inst, good) == (0, 0)
    assert not verify_solution(inst, SolutionTuple(((1, 1), (0, 2))))

    chain = chain_instance()
    x = SolutionTuple(((0,), (1,), (Fraction(1, 2),)))
    assert verify_solution(chain, x)
    assert check_chain_lemma(chain, x)
    # x1 above its bound d1 = 1
    assert not verify_solution(chain, SolutionTuple(((0,), (Fraction(3, 2),), (0,))))


def test_chain_lemma_needs_a_solution():
    with pytest.raises(ContractError):
        check_chain_lemma(two_point_instance(), SolutionTuple(((1,), (1,))))


def test_stacked_layout():
    x = SolutionTuple.from_stacked([1, 2, 3, 4, 5, 6], 2)
    assert x.k == 2 and x.n == 2
    assert x[1] == (3, 4)
    assert x.stacked()[stacked_index(2, 2, 1)] == 6
    with pytest.raises(DimensionError):
        SolutionTuple.from_stacked([1, 2, 3], 2)


def test_branches_cover_every_level():
    all_branches = branches(2, 2)
    assert len(all_branches) == 9
    assert all_branches[0] == Branch((0, 0))
    assert all_branches[-1] == Branch((2, 2))


def test_branch_constraints_contain_solutions():
    chain = chain_instance()
    x = SolutionTuple(((0,), (1,), (Fraction(1, 2),)))
    inside = [b for b in branches(1, 2) if branch_constraints(chain, b).contains(x.stacked())]
    assert inside == [Branch((2,))]
    with pytest.raises(InvalidInstanceError):
        branch_constraints(chain, Branch((3,)))


def test_lcp_reduction():
    inst = diagonal_hlcp_instance()
    m, r = as_lcp(inst)
    assert m == Mat.identity(2)
    assert r == (1, -1)
    assert lcp_solution_to_tuple(inst, [0, 1]) == SolutionTuple(((1, 0), (0, 1)))
    with pytest.raises(InvalidInstanceError):
        as_lcp(chain_instance())


def test_codec_reads_rationals_and_checks_shapes():
    doc = {"n": 1, "k": 2, "C": [[[1]], [[1]], [[1]]], "d": [["2/3"]], "q": ["-3/2"]}
    inst = instance_from_dict(doc)
    assert inst.d == ((Fraction(2, 3),),)
    assert inst.q == (Fraction(-3, 2),)
    assert instance_from_dict(json.loads(dumps(instance_to_dict(inst)))) == inst

    with pytest.raises(InputFormatError):
        instance_from_dict({"C": [[[1]], [[1]]], "q": [0.5]})
    with pytest.raises(DimensionError):
        matrix_tuple_from_dict({"n": 2, "C": [[[1]], [[1]]]})
    with pytest.raises(DimensionError):
        matrix_tuple_from_dict({"C": [[[1, 2]], [[1]]]})
    with pytest.raises(InputFormatError):
        matrix_tuple_from_dict({"C": [[[1]]]})
    with pytest.raises(InvalidInstanceError):
        instance_from_dict({"C": [[[1]], [[1]], [[1]]], "d": [[-1]], "q": [0]})


def test_solution_codec():
    x = SolutionTuple(((0,), (1,), (Fraction(1, 2),)))
    doc = solution_tuple_to_dict(x)
    assert doc == {"x": [[0], [1], ["1/2"]]}
    assert solution_tuple_from_dict(doc) == x


def test_verdict_serialization():
    verdict = Verdict.no("r0_w", support=[0], witness=SolutionTuple(((0,), (1,))))
    doc = verdict.to_dict()
    assert doc == {"property": "r0_w", "status": "No", "certificate": {"support": [0], "witness": [[0], [1]]}}
    back = Verdict.from_dict(doc)
    assert back.status is VerdictStatus.NO and back.is_no
    assert str(Verdict.unknown("column_w0")) == "column_w0: Unknown"
    assert json.loads(dumps({"b": 1, "a": Fraction(1, 2)})) == {"a": "1/2", "b": 1}


def _random_point_near_branches(rng, n: int, k: int, d) -> SolutionTuple:
    xs = [[Fraction(0)] * n for _ in range(k + 1)]
    for i in range(n):
        level = int(rng.integers(0, k + 1))
        if level == 0:
            xs[0][i] = Fraction(int(rng.integers(0, 3)))
            continue
        for j in range(1, level):
            xs[j][i] = d[j - 1][i]
        top = d[level - 1][i] if level < k else Fraction(3)
        xs[level][i] = top * Fraction(int(rng.integers(0, 3)), 2)
    if rng.integers(0, 2):
        block, coord = int(rng.integers(0, k + 1)), int(rng.integers(0, n))
        xs[block][coord] += Fraction(int(rng.integers(-2, 3)), 2)
    return SolutionTuple(tuple(tuple(x) for x in xs))


@pytest.mark.parametrize("seed", range(8))
def test_solutions_are_exactly_the_union_of_branches(seed):
    rng = make_rng(seed, 5)
    n, k = 1 + seed % 2, 1 + (seed // 2) % 3
    c = MatrixTuple.from_lists([[[int(rng.integers(-2, 3)) for _ in range(n)] for _ in range(n)]
                                for _ in range(k + 1)])
    d = tuple(tuple(Fraction(int(rng.integers(1, 4)), 2) for _ in range(n)) for _ in range(k - 1))
    agreed = {True: 0, False: 0}
    for trial in range(40):
        x = _random_point_near_branches(rng, n, k, d)
        q = tuple(Fraction(0) for _ in range(n))
        q = equation_residual(Instance(c, d, q), x)
        if trial % 3 == 0:
            q = tuple(v + 1 for v in q)
        inst = Instance(c, d, q)
        in_some_branch = any(branch_constraints(inst, b).contains(x.stacked()) for b in branches(n, k))
        assert verify_solution(inst, x) == in_some_branch
        agreed[in_some_branch] += 1
    assert agreed[True] > 0 and agreed[False] > 0
