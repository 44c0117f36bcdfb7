import dataclasses
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from conformal_type_lab.utils import fraction_to_dict

HYPERBOLIC = "hyperbolic"
VIOLATED = "conditions-violated"
INCONCLUSIVE = "inconclusive"
VERDICTS = (HYPERBOLIC, VIOLATED, INCONCLUSIVE)

PIECE_OK = "ok"
PIECE_VIOLATED = "violated"
PIECE_INCONCLUSIVE = "inconclusive"

SPHERICAL_ISOPERIMETRIC_ANNOTATION = (
    "linear isoperimetric inequality with respect to the pull-back spherical metric; "
    "Gromov hyperbolic"
)
METRIC_ISOPERIMETRIC_ANNOTATION = (
    "linear isoperimetric inequality with respect to the surface metric; Gromov hyperbolic"
)

Number = Union[Fraction, float, int]


def _number_to_json(value: Optional[Number]) -> Any:
    """Exact rationals as num/den pairs; floats as floats (inf as the string "inf")."""
    if value is None:
        return None
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return fraction_to_dict(Fraction(value))
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(value)


@dataclasses.dataclass
class PieceRecord:
    """
    One checked piece (subgraph or cluster) of a certificate.

    ``total`` is the excess sum of a subgraph (exact) or the curvature sum of a cluster.
    """

    id: str  # Piece or cluster id
    ids: List[str]  # Member vertex or triangle ids
    size: int  # #(piece)
    total: Optional[Number]  # Excess or curvature sum; None when inconclusive
    status: str = PIECE_OK  # ok, violated or inconclusive
    violations: List[str] = dataclasses.field(default_factory=list)  # Failed conditions

    def to_dict(self, sum_key: str) -> Dict[str, Any]:
        return {
            "id": self.id,
            "ids": list(self.ids),
            "size": self.size,
            sum_key: _number_to_json(self.total),
            "status": self.status,
            "violations": list(self.violations),
        }


@dataclasses.dataclass
class Certificate:
    """
    Defines the certificate schema shared by every theorem checker.

    A hyperbolic verdict asserts that the hypotheses of the named theorem hold for the
    supplied data; it makes no claim beyond those hypotheses.
    """

    # Required fields (no default values) must come first
    verdict: str  # hyperbolic, conditions-violated or inconclusive
    theorem: str  # Theorem tag, e.g. "T2", "Tfinal", "T", "final-tiling", "corollary"
    eps: Optional[Number]  # ε of the checked conditions
    M: Optional[int]  # Piece or cluster size bound

    # Optional fields (with default values) come after required fields
    q: Optional[int] = None  # Degree of the complex, when applicable
    pieces: List[PieceRecord] = dataclasses.field(default_factory=list)
    witness: Optional[Dict[str, Any]] = None  # First violation: condition, piece, detail
    annotation: Optional[str] = None  # Gromov hyperbolicity remark
    ledger: Optional[Dict[str, Any]] = None  # Constant ledger, as a dict
    notes: List[str] = dataclasses.field(default_factory=list)
    sum_key: str = "excess_sum"  # JSON key for piece totals

    @classmethod
    def get_schema_fields(cls) -> List[str]:
        """
        Returns a list of all field names in the schema.

        Returns:
        --------
        List[str] : List of field names in declaration order
        """
        return [field.name for field in dataclasses.fields(cls)]

    @property
    def is_hyperbolic(self) -> bool:
        return self.verdict == HYPERBOLIC

    @property
    def violations(self) -> List[str]:
        """Distinct failed condition names across pieces, in order of appearance."""
        seen: List[str] = []
        for piece in self.pieces:
            for condition in piece.violations:
                if condition not in seen:
                    seen.append(condition)
        if self.witness and self.witness.get("condition") not in seen + [None]:
            seen.append(self.witness["condition"])
        return seen

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "verdict": self.verdict,
            "theorem": self.theorem,
            "q": self.q,
            "eps": _number_to_json(self.eps),
            "M": self.M,
            "pieces": [piece.to_dict(self.sum_key) for piece in self.pieces],
            "witness": self.witness,
        }
        if self.annotation is not None:
            data["annotation"] = self.annotation
        if self.ledger is not None:
            data["ledger"] = self.ledger
        if self.notes:
            data["notes"] = list(self.notes)
        return data

    def pieces_frame(self) -> pd.DataFrame:
        """One row per piece, with exact totals split into numerator/denominator columns."""
        rows = []
        for piece in self.pieces:
            row = {"id": piece.id, "size": piece.size, "status": piece.status}
            total = piece.total
            if isinstance(total, (Fraction, int)):
                total = Fraction(total)
                row[f"{self.sum_key}_num"] = total.numerator
                row[f"{self.sum_key}_den"] = total.denominator
            else:
                row[self.sum_key] = total
            row["violations"] = ";".join(piece.violations)
            rows.append(row)
        return pd.DataFrame(rows)
