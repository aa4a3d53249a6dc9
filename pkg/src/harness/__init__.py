# Seeded generators, fixtures, oracles and theorem suites

from .generators import TupleKind, QMode, DMode, GeneratorSpec, gen_tuple, gen_instance
from .fixtures import FIXTURES
from .oracles import (
    grid_points, grid_membership_disagreements, segment_in_solution_set, grid_connectivity_oracle
)
from .suites import (
    SUITES, Suite, SuiteReport, Failure, TrialStatus, TrialOutcome, run_trial, run_suite, run_suites
)
from .export_manager import ExportManager

__all__ = [
    'TupleKind', 'QMode', 'DMode', 'GeneratorSpec', 'gen_tuple', 'gen_instance', 'FIXTURES',
    'grid_points', 'grid_membership_disagreements', 'segment_in_solution_set',
    'grid_connectivity_oracle', 'SUITES', 'Suite', 'SuiteReport', 'Failure', 'TrialStatus',
    'TrialOutcome', 'run_trial', 'run_suite', 'run_suites', 'ExportManager'
]
