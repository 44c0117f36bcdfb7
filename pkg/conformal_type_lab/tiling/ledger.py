"""
The isoperimetric constant ledger.

Each constant is recorded with the statement it comes from:

    C_length = 1/sin ε                      (k <= 0, law of sines in the plane)
             = π / (sin(ε/2) · sin ε)       (k > 0, normalized to k = 1)
    C_liso   = 9 · C_length² / (2π)         (linear isoperimetric constant)
    C_comb   = 6M² / ε                      (triangles versus boundary edges)
    C        = C_liso · C_comb
    C_final  = C² + 2C
"""

import dataclasses
import math
from typing import Any, Dict

from conformal_type_lab.errors import DomainError
from conformal_type_lab.spherical.geometry import length_constant

PROVENANCE = {
    "C_length": "side-length comparison: max(a, b) <= C_length * c for corner angle >= eps",
    "C_liso": "linear isoperimetric inequality for clusters: 9 * C_length^2 / (2 pi)",
    "C_comb": "combinatorial bound: triangles <= (6 M^2 / eps) * boundary edges",
    "C": "ledger convention: C = C_liso * C_comb",
    "C_final": "final isoperimetric constant: C^2 + 2C",
}


@dataclasses.dataclass(frozen=True)
class ConstantLedger:
    eps: float
    M: int
    k: float
    C_length: float
    C_liso: float
    C_comb: float
    C: float
    C_final: float

    def entries(self) -> Dict[str, float]:
        return {
            "C_length": self.C_length,
            "C_liso": self.C_liso,
            "C_comb": self.C_comb,
            "C": self.C,
            "C_final": self.C_final,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eps": self.eps,
            "M": self.M,
            "k": self.k,
            "constants": {
                name: {"value": value, "provenance": PROVENANCE[name]}
                for name, value in self.entries().items()
            },
        }


def constant_ledger(eps: float, M: int, k: float) -> ConstantLedger:
    """Evaluate every constant of the isoperimetric chain.

    Args:
        eps (float): ε in (0, π).
        M (int): Cluster size bound, at least 1.
        k (float): Model curvature bound; any k > 0 is normalized to 1.

    Raises:
        DomainError: If ε is outside (0, π) or M < 1.
    """
    if M < 1:
        raise DomainError("M", M, "integers >= 1")
    c_length = length_constant(eps, k)
    c_liso = 9 * c_length ** 2 / (2 * math.pi)
    c_comb = 6 * M ** 2 / eps
    c = c_liso * c_comb
    return ConstantLedger(
        eps=float(eps),
        M=int(M),
        k=float(k),
        C_length=c_length,
        C_liso=c_liso,
        C_comb=c_comb,
        C=c,
        C_final=c * c + 2 * c,
    )
