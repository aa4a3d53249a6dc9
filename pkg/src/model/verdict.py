"""
Verdicts
Yes / No / Unknown answers with machine-checkable certificates
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict


class VerdictStatus(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    """Answer for one property; the certificate holds exact objects (Mat, Vec, SolutionTuple)"""
    property: str
    status: VerdictStatus
    certificate: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def yes(cls, prop: str, **certificate) -> "Verdict":
        return cls(prop, VerdictStatus.YES, certificate)

    @classmethod
    def no(cls, prop: str, **certificate) -> "Verdict":
        return cls(prop, VerdictStatus.NO, certificate)

    @classmethod
    def unknown(cls, prop: str, **certificate) -> "Verdict":
        return cls(prop, VerdictStatus.UNKNOWN, certificate)

    @property
    def is_yes(self) -> bool:
        return self.status is VerdictStatus.YES

    @property
    def is_no(self) -> bool:
        return self.status is VerdictStatus.NO

    @property
    def is_unknown(self) -> bool:
        return self.status is VerdictStatus.UNKNOWN

    def to_dict(self) -> Dict[str, Any]:
        from .codec import to_jsonable
        return {
            "property": self.property,
            "status": self.status.value,
            "certificate": to_jsonable(self.certificate),
        }

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "Verdict":
        """Inverse of to_dict; the certificate stays in its JSON form"""
        return cls(doc["property"], VerdictStatus(doc["status"]), dict(doc.get("certificate", {})))

    def __str__(self) -> str:
        return f"{self.property}: {self.status.value}"
