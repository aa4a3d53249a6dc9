# Exhaustive, Newton and degree solvers for EHLCP instances

from .residual import ehlcp_residual
from .solution_set import SolutionSet, solve_all
from .newton import NewtonStatus, NewtonResult, solve_newton
from .degree import DegreeResult, degree, branch_system

__all__ = [
    'ehlcp_residual', 'SolutionSet', 'solve_all', 'NewtonStatus', 'NewtonResult',
    'solve_newton', 'DegreeResult', 'degree', 'branch_system'
]
