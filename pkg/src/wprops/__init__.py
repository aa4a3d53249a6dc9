# Tuple-level properties and transformations

from .properties import (
    Representative, representatives, representative_matrix, column_w, is_column_w_certificate,
    column_w_diag_probe, column_w0, r0_w, ssm_w, is_r0_w_witness, is_ssm_w_witness,
    tuple_properties
)
from .transforms import (
    normalize_tuple, diagonal_collapse, permute_tuple, DiagonalCollapse,
    collapse_from_ssm_w_witness, collapse_from_column_w_failure
)

__all__ = [
    'Representative', 'representatives', 'representative_matrix', 'column_w',
    'is_column_w_certificate', 'column_w_diag_probe', 'column_w0', 'r0_w', 'ssm_w',
    'is_r0_w_witness', 'is_ssm_w_witness', 'tuple_properties',
    'normalize_tuple', 'diagonal_collapse', 'permute_tuple', 'DiagonalCollapse',
    'collapse_from_ssm_w_witness', 'collapse_from_column_w_failure'
]
