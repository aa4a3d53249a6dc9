# Single-matrix classes: Z, P, M, SSM and R0

from .classes import (
    supports, is_Z, is_P, is_P_by_sign_patterns, p_witness_search, is_p_witness,
    is_SSM, is_ssm_witness, is_M_matrix, is_R0, is_r0_witness
)
from .report import MatrixClassReport, classify

__all__ = [
    'supports', 'is_Z', 'is_P', 'is_P_by_sign_patterns', 'p_witness_search', 'is_p_witness',
    'is_SSM', 'is_ssm_witness', 'is_M_matrix', 'is_R0', 'is_r0_witness',
    'MatrixClassReport', 'classify'
]
