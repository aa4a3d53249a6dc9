"""
EHLCP Toolkit
Exact solver, property checkers and randomized theorem harness for the
extended horizontal linear complementarity problem
"""

import os
import sys

# Add current directory to path for absolute imports
sys.path.append(os.path.dirname(__file__))

from config.settings import load_config
from model import Instance, MatrixTuple, SolutionTuple
from solver import solve_all, degree
from wprops import tuple_properties

__version__ = "1.0.0"

__all__ = [
    'Instance',
    'MatrixTuple',
    'SolutionTuple',
    'solve_all',
    'degree',
    'tuple_properties',
    'load_config'
]
