"""
Logarithms of radii, kept exactly as a·π + b.

Stage radii are far beyond any float, but each log R_n is an exact combination of π with a
SymbolicCount coefficient and a rational offset. Comparisons between such values are decided
with rational bounds on π.
"""

import dataclasses
import math
from fractions import Fraction
from typing import Any, Dict, Union

from conformal_type_lab.example_factory.counts import SymbolicCount
from conformal_type_lab.utils import fraction_to_dict

PI_LOWER = Fraction(3141592653589793238462643383279, 10 ** 30)
PI_UPPER = Fraction(3141592653589793238462643383280, 10 ** 30)


def _sign_of_pi_combination(a: Fraction, b: Fraction) -> int:
    """Sign of a·π + b for rationals a and b."""
    if a == 0:
        return (b > 0) - (b < 0)
    low, high = sorted((a * PI_LOWER + b, a * PI_UPPER + b))
    if low > 0:
        return 1
    if high < 0:
        return -1
    raise ArithmeticError(f"sign of {a}*pi + {b} is not decided by the rational bounds")


@dataclasses.dataclass(frozen=True)
class LogLength:
    """The natural logarithm a_pi·π + b of a length.

    Attributes:
        a_pi (SymbolicCount): Coefficient of π.
        b (Fraction): Rational offset.
    """

    a_pi: SymbolicCount = dataclasses.field(default_factory=SymbolicCount)
    b: Fraction = Fraction(0)

    @classmethod
    def of(cls, a_pi: Union[SymbolicCount, int, Fraction] = 0, b=0) -> 'LogLength':
        return cls(SymbolicCount.coerce(a_pi), Fraction(b))

    def __add__(self, other: 'LogLength') -> 'LogLength':
        return LogLength(self.a_pi + other.a_pi, self.b + other.b)

    def __sub__(self, other: 'LogLength') -> 'LogLength':
        return LogLength(self.a_pi - other.a_pi, self.b - other.b)

    def scaled(self, factor: Union[int, Fraction]) -> 'LogLength':
        return LogLength(self.a_pi * Fraction(factor), self.b * Fraction(factor))

    def sign(self) -> int:
        """Exact sign of a_pi·π + b."""
        if self.a_pi.is_constant:
            return _sign_of_pi_combination(self.a_pi.constant, self.b)
        # A non-constant coefficient is astronomically larger than any rational offset
        return self.a_pi.sign()

    def compare(self, other: 'LogLength') -> int:
        return (self - other).sign()

    def __lt__(self, other: 'LogLength') -> bool:
        return self.compare(other) < 0

    def __le__(self, other: 'LogLength') -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: 'LogLength') -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: 'LogLength') -> bool:
        return self.compare(other) >= 0

    def approx(self) -> float:
        """The value as a float; ``±inf`` once the coefficient overflows."""
        coefficient = self.a_pi.approx_float()
        if math.isinf(coefficient):
            return coefficient
        return coefficient * math.pi + float(self.b)

    def to_dict(self) -> Dict[str, Any]:
        return {"a_pi": self.a_pi.to_json(), "b": fraction_to_dict(self.b)}

    def __str__(self) -> str:
        return f"({self.a_pi})*pi + {self.b}"
