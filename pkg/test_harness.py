"""
Test generators, grid oracles, theorem suites and report export
"""

import sys
import os
import json

import pandas as pd
import pytest

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from harness import (
    FIXTURES, SUITES, DMode, ExportManager, GeneratorSpec, QMode, SuiteReport, TrialStatus, TupleKind,
    gen_instance, gen_tuple, grid_connectivity_oracle, grid_membership_disagreements, grid_points,
    run_suite, run_suites, run_trial, segment_in_solution_set
)
from harness.suites import Failure
from matclass import is_M_matrix, is_Z
from model import SolutionTuple
from solver import solve_all
from utils.errors import ResampleBudgetExceeded, UnknownSuiteError
from wprops import column_w


def test_generators_are_deterministic():
    params = GeneratorSpec(2, 2, TupleKind.GENERAL, seed=11)
    assert gen_tuple(params) == gen_tuple(params)
    assert gen_tuple(params) != gen_tuple(GeneratorSpec(2, 2, TupleKind.GENERAL, seed=12))


def test_certified_kinds():
    c = gen_tuple(GeneratorSpec(2, 2, TupleKind.COLUMN_W, seed=5))
    assert column_w(c).is_yes
    m = gen_tuple(GeneratorSpec(3, 1, TupleKind.M_ZERO, seed=5))
    assert is_M_matrix(m.c0).is_yes
    z = gen_tuple(GeneratorSpec(2, 2, TupleKind.Z_NORMALIZED, seed=5))
    assert z.c0.is_diagonal() and all(is_Z(ci) for ci in z.trailing)
    g = gen_tuple(GeneratorSpec(2, 1, TupleKind.GRID_FRIENDLY, seed=5))
    assert all(v in (-1, 0, 1) for v in g[1].entries)


def test_resample_budget():
    params = GeneratorSpec(2, 1, TupleKind.COLUMN_W, entry_range=(0, 0), seed=1, resample_budget=3)
    with pytest.raises(ResampleBudgetExceeded):
        gen_tuple(params)


def test_gen_instance_modes():
    c = gen_tuple(GeneratorSpec(2, 3, TupleKind.GENERAL, seed=2))
    positive = gen_instance(c, QMode.POSITIVE, DMode.RANDOM, seed=4)
    assert all(v > 0 for v in positive.q)
    assert len(positive.d) == 2 and all(v > 0 for dj in positive.d for v in dj)
    nonneg = gen_instance(c, QMode.NONNEG, DMode.ONES, seed=4)
    assert all(v >= 0 for v in nonneg.q)
    assert nonneg.d == ((1, 1), (1, 1))
    assert gen_instance(c, seed=9) == gen_instance(c, seed=9)


def test_grid_oracles_on_fixtures():
    two_point = FIXTURES["two_point"]()
    s = solve_all(two_point)
    assert grid_membership_disagreements(two_point, s) == []
    assert grid_connectivity_oracle(two_point, s) is False
    assert not segment_in_solution_set(two_point, SolutionTuple(((1,), (0,))), SolutionTuple(((0,), (1,))))

    ray = FIXTURES["ray"]()
    s = solve_all(ray)
    points = grid_points(ray, bound=4)
    assert len(points) == 9
    assert grid_connectivity_oracle(ray, s, points=points) is True
    assert grid_connectivity_oracle(ray, s, max_points=5, points=points) is None
    assert segment_in_solution_set(ray, SolutionTuple(((0,), (0,))), SolutionTuple(((0,), (4,))))


def test_fixture_suite_passes_every_check():
    for trial in range(7):
        assert run_trial("S-FIX", seed=1, trial=trial, n=2, k=1).status is TrialStatus.PASS
    report = run_suite("S-FIX", trials=7, seed=1)
    assert report.ok and report.passes == 7
    assert report.to_dict()["label"] == "exhaustive"


def test_suite_reports_are_reproducible():
    first = run_suite("S-T41", trials=4, sizes=[[2, 1]], seed=3).to_dict()
    second = run_suite("S-T41", trials=4, sizes=[[2, 1]], seed=3).to_dict()
    assert first == second
    assert first["trials"] == 4


def test_ssm_w_degree_suite_checks_every_bound_vector():
    assert "independent of seed and d" in SUITES["S-T45"].description
    report = run_suite("S-T45", trials=3, sizes=[[1, 2]], seed=2)
    assert report.trials == 3
    assert report.ok, [f.to_dict() for f in report.failures]


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("S-NOPE", trials=1)
    with pytest.raises(UnknownSuiteError):
        run_trial("S-NOPE", seed=0, trial=0, n=1, k=1)


@pytest.mark.slow
def test_every_suite_passes_a_short_run():
    reports = run_suites(list(SUITES), trials=4, sizes=[[1, 1], [2, 1], [2, 2]], seed=1)
    failed = {r.suite_id: [f.to_dict() for f in r.failures] for r in reports if not r.ok}
    assert failed == {}


def test_export_manager(tmp_path):
    report = SuiteReport("S-T41", "column W => SSM-W => R0-W", False, 1, trials=2, passes=1)
    report.failures.append(Failure(1, 1, 2, 1, {"n": 2}, "ssm_w=Yes", "No"))
    exporter = ExportManager(str(tmp_path))

    json_path = exporter.export_to_json([report])
    with open(json_path) as f:
        assert json.load(f)[0]["failures"][0]["observed"] == "No"

    csv_path = exporter.export_to_csv([report])
    summary = pd.read_csv(csv_path)
    assert summary.loc[0, "suite"] == "S-T41"
    assert summary.loc[0, "failures"] == 1
    failures = pd.read_csv(os.path.join(str(tmp_path), "suite_summary_failures.csv"))
    assert failures.loc[0, "expected"] == "ssm_w=Yes"
