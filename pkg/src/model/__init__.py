# EHLCP domain model: instances, solutions, branches, verdicts and the JSON codec

from .instance import MatrixTuple, Instance, SolutionTuple, identity_tuple
from .complementarity import check_complementarity, verify_solution, check_chain_lemma, equation_residual
from .branches import (
    Branch, PieceConstraints, Piece, branches, branch_constraints, stacked_index,
    as_lcp, lcp_solution_to_tuple
)
from .verdict import VerdictStatus, Verdict
from .codec import (
    to_jsonable, dumps, matrix_tuple_from_dict, instance_from_dict, matrix_tuple_to_dict,
    instance_to_dict, solution_tuple_to_dict, solution_tuple_from_dict
)

__all__ = [
    'MatrixTuple', 'Instance', 'SolutionTuple', 'identity_tuple',
    'check_complementarity', 'verify_solution', 'check_chain_lemma', 'equation_residual',
    'Branch', 'PieceConstraints', 'Piece', 'branches', 'branch_constraints', 'stacked_index',
    'as_lcp', 'lcp_solution_to_tuple',
    'VerdictStatus', 'Verdict',
    'to_jsonable', 'dumps', 'matrix_tuple_from_dict', 'instance_from_dict', 'matrix_tuple_to_dict',
    'instance_to_dict', 'solution_tuple_to_dict', 'solution_tuple_from_dict'
]
