"""
Matrix class report
All class verdicts for one matrix
"""

from dataclasses import dataclass
from typing import Any, Dict

from exactmath import Mat
from model import Verdict
from .classes import is_Z, is_P, is_SSM, is_M_matrix, is_R0


@dataclass(frozen=True)
class MatrixClassReport:
    is_Z: Verdict
    is_P: Verdict
    is_M: Verdict
    is_SSM: Verdict
    is_R0: Verdict

    def verdicts(self):
        return [self.is_Z, self.is_P, self.is_M, self.is_SSM, self.is_R0]

    def to_dict(self) -> Dict[str, Any]:
        return {v.property: v.to_dict() for v in self.verdicts()}


def _z_verdict(m: Mat) -> Verdict:
    if is_Z(m):
        return Verdict.yes("Z")
    i, j = next((i, j) for i in range(m.n_rows) for j in range(m.n_cols) if i != j and m[i, j] > 0)
    return Verdict.no("Z", entry=[i, j], value=m[i, j])


def classify(m: Mat) -> MatrixClassReport:
    """Evaluate every class predicate on m"""
    return MatrixClassReport(
        is_Z=_z_verdict(m),
        is_P=is_P(m),
        is_M=is_M_matrix(m),
        is_SSM=is_SSM(m),
        is_R0=is_R0(m),
    )
