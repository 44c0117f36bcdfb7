"""
Exact counts too large for machine integers.

A :class:`SymbolicCount` is a finite sum of terms c·2^x with rational coefficients c. The
exponent x is an integer or, once it no longer fits in memory as the exponent of a power of
two, itself a SymbolicCount. Terms are kept in a normal form:

    - integer exponents up to ``FOLD_BITS`` are folded into the constant term;
    - every other coefficient has odd numerator and odd denominator;
    - terms whose exponents differ by at most ``FOLD_BITS`` are merged.

Two counts built from the same quantities then compare equal structurally, so identities
between stage counts are checked exactly without evaluating them.
"""

import math
from collections import defaultdict
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from conformal_type_lab.utils import fraction_to_dict

FOLD_BITS = 256
# Integer exponents up to this size are still evaluated exactly when deciding signs
EXACT_BITS = 1 << 16

Exponent = Union[int, 'SymbolicCount']
Scalar = Union[int, Fraction]


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def _two_adic(value: Fraction) -> int:
    return _v2(abs(value.numerator)) - _v2(value.denominator)


def _as_exponent(exponent: Any) -> Exponent:
    if isinstance(exponent, SymbolicCount):
        if not exponent.is_constant:
            return exponent
        exponent = exponent.constant
    value = Fraction(exponent)
    if value.denominator != 1:
        raise ValueError(f"exponent {value} is not an integer")
    return int(value)


def _class_and_offset(exponent: Exponent) -> Tuple[Optional['SymbolicCount'], int]:
    """Split an exponent into its non-constant part and its integer constant."""
    if isinstance(exponent, int):
        return None, exponent
    offset = exponent.constant
    if offset.denominator != 1:
        raise ValueError(f"exponent {exponent} has a non-integer constant")
    return exponent._without_constant(), int(offset)


def _rebuild(key: Optional['SymbolicCount'], offset: int) -> Exponent:
    return offset if key is None else key._with_constant(offset)


def _normalize_once(terms: Iterable[Tuple[Any, Any]]) -> Dict[Exponent, Fraction]:
    constant = Fraction(0)
    buckets: Dict[Optional[SymbolicCount], List[Tuple[int, Fraction]]] = defaultdict(list)
    for exponent, coeff in terms:
        coeff = Fraction(coeff)
        if not coeff:
            continue
        exponent = _as_exponent(exponent)
        if isinstance(exponent, int) and exponent <= FOLD_BITS:
            constant += coeff * Fraction(2) ** exponent
            continue
        key, offset = _class_and_offset(exponent)
        buckets[key].append((offset, coeff))

    result: Dict[Exponent, Fraction] = {}
    if constant:
        result[0] = constant
    for key, entries in buckets.items():
        entries.sort(key=lambda entry: entry[0])
        groups = []
        base, total = entries[0][0], Fraction(0)
        for offset, coeff in entries:
            if offset - base > FOLD_BITS:
                groups.append((base, total))
                base, total = offset, Fraction(0)
            total += coeff * 2 ** (offset - base)
        groups.append((base, total))
        for base, total in groups:
            if not total:
                continue
            shift = _two_adic(total)
            exponent = _rebuild(key, base + shift)
            coeff = total / Fraction(2) ** shift
            if isinstance(exponent, int) and exponent <= FOLD_BITS:
                result[0] = result.get(0, Fraction(0)) + coeff * Fraction(2) ** exponent
                if not result[0]:
                    del result[0]
            else:
                result[exponent] = result.get(exponent, Fraction(0)) + coeff
    return result


def _normalize(terms: Iterable[Tuple[Any, Any]]) -> Dict[Exponent, Fraction]:
    normalized = _normalize_once(terms)
    while True:
        again = _normalize_once(normalized.items())
        if again == normalized:
            return normalized
        normalized = again


def _is_constant_key(exponent: Exponent) -> bool:
    return isinstance(exponent, int) and exponent == 0


class SymbolicCount:
    """An exact rational of the form Σ c·2^x; see the module docstring.

    Args:
        value (Scalar): Initial constant value.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, value: Scalar = 0):
        value = Fraction(value)
        self._terms: Dict[Exponent, Fraction] = {0: value} if value else {}
        self._hash: Optional[int] = None

    @classmethod
    def _from_terms(cls, terms: Iterable[Tuple[Any, Any]]) -> 'SymbolicCount':
        count = cls()
        count._terms = _normalize(terms)
        return count

    @classmethod
    def coerce(cls, value: Union['SymbolicCount', Scalar]) -> 'SymbolicCount':
        return value if isinstance(value, SymbolicCount) else cls(value)

    @classmethod
    def power_of_two(cls, exponent: Union['SymbolicCount', int]) -> 'SymbolicCount':
        """2^exponent."""
        return cls._from_terms([(exponent, 1)])

    def _without_constant(self) -> 'SymbolicCount':
        count = SymbolicCount()
        count._terms = {x: c for x, c in self._terms.items() if not _is_constant_key(x)}
        return count

    def _with_constant(self, value: Scalar) -> 'SymbolicCount':
        count = self._without_constant()
        if value:
            count._terms[0] = Fraction(value)
        return count

    @property
    def is_constant(self) -> bool:
        return all(_is_constant_key(x) for x in self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def constant(self) -> Fraction:
        for exponent, coeff in self._terms.items():
            if _is_constant_key(exponent):
                return coeff
        return Fraction(0)

    def terms(self) -> List[Tuple[Exponent, Fraction]]:
        """(exponent, coefficient) pairs, constant term last."""
        variable = sorted(
            ((x, c) for x, c in self._terms.items() if not _is_constant_key(x)),
            key=lambda term: str(term[0]),
        )
        if self.constant:
            variable.append((0, self.constant))
        return variable

    def _key(self) -> frozenset:
        return frozenset(self._terms.items())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.constant) if self.is_constant else hash(self._key())
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, SymbolicCount):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant == other
        return NotImplemented

    def __add__(self, other) -> 'SymbolicCount':
        other = SymbolicCount.coerce(other)
        return SymbolicCount._from_terms(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> 'SymbolicCount':
        count = SymbolicCount()
        count._terms = {x: -c for x, c in self._terms.items()}
        return count

    def __sub__(self, other) -> 'SymbolicCount':
        return self + (-SymbolicCount.coerce(other))

    def __rsub__(self, other) -> 'SymbolicCount':
        return SymbolicCount.coerce(other) - self

    def __mul__(self, other) -> 'SymbolicCount':
        if isinstance(other, (int, Fraction)):
            return SymbolicCount._from_terms((x, c * other) for x, c in self._terms.items())
        if not isinstance(other, SymbolicCount):
            return NotImplemented
        return SymbolicCount._from_terms(
            (_add_exponents(x, y), c * d)
            for x, c in self._terms.items() for y, d in other._terms.items()
        )

    __rmul__ = __mul__

    def shift(self, exponent: Union['SymbolicCount', int]) -> 'SymbolicCount':
        """self · 2^exponent."""
        return self * SymbolicCount.power_of_two(exponent)

    def _exact_value(self) -> Optional[Fraction]:
        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            if not isinstance(exponent, int) or exponent > EXACT_BITS:
                return None
            total += coeff * 2 ** exponent
        return total

    def _dominant(self) -> Optional[Tuple[Exponent, Fraction]]:
        best: Optional[Tuple[Exponent, Fraction]] = None
        for exponent, coeff in self._terms.items():
            if _is_constant_key(exponent):
                continue
            if best is None or _compare_exponents(exponent, best[0]) > 0:
                best = (exponent, coeff)
        return best

    def sign(self) -> int:
        """−1, 0 or 1.

        Exact whenever every exponent is an integer of moderate size. Otherwise the term of
        largest exponent decides; merged terms are more than ``FOLD_BITS`` apart, so it
        outweighs the rest for the small coefficients that stage counts carry.
        """
        exact = self._exact_value()
        if exact is not None:
            return (exact > 0) - (exact < 0)
        dominant = self._dominant()
        if dominant is None:
            return (self.constant > 0) - (self.constant < 0)
        return 1 if dominant[1] > 0 else -1

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __int__(self) -> int:
        if not self.is_constant or self.constant.denominator != 1:
            raise OverflowError(f"{self} is not a machine-sized integer")
        return int(self.constant)

    def ratio_to(self, other: Union['SymbolicCount', Scalar]) -> Optional[Fraction]:
        """The rational r with self == r·other, or None if there is none."""
        other = SymbolicCount.coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("ratio to a zero count")
        if self.is_zero:
            return Fraction(0)
        if self.is_constant and other.is_constant:
            return self.constant / other.constant
        mine, theirs = self._dominant(), other._dominant()
        if mine is None or theirs is None:
            return None
        key_a, offset_a = _class_and_offset(mine[0])
        key_b, offset_b = _class_and_offset(theirs[0])
        if key_a != key_b or abs(offset_a - offset_b) > FOLD_BITS:
            return None
        ratio = mine[1] / theirs[1] * Fraction(2) ** (offset_a - offset_b)
        return ratio if self == other * ratio else None

    def approx_log2(self) -> float:
        """log2 |self|, possibly ``inf`` when even the exponent overflows a float."""
        if self.is_zero:
            return float("-inf")
        dominant = self._dominant()
        if dominant is None:
            value = abs(self.constant)
            return _log2_int(value.numerator) - _log2_int(value.denominator)
        exponent, coeff = dominant
        coeff = abs(coeff)
        return _approx_exponent(exponent) + \
            _log2_int(coeff.numerator) - _log2_int(coeff.denominator)

    def approx_float(self) -> float:
        """The value as a float, ``±inf`` on overflow."""
        sign = self.sign()
        if sign == 0:
            return 0.0
        if self.is_constant:
            try:
                return float(self.constant)
            except OverflowError:
                return sign * float("inf")
        log2 = self.approx_log2()
        if log2 > 1023:
            return sign * float("inf")
        return sign * 2.0 ** log2

    def to_json(self) -> Any:
        """An int for integral constants, a num/den pair for other constants, else terms."""
        if self.is_constant:
            value = self.constant
            return int(value) if value.denominator == 1 else fraction_to_dict(value)
        return {
            "terms": [
                {"coeff": fraction_to_dict(coeff), "exp": _exponent_json(exponent)}
                for exponent, coeff in self.terms()
            ]
        }

    def __str__(self) -> str:
        if self.is_constant:
            return str(self.constant)
        parts = []
        for exponent, coeff in self.terms():
            if _is_constant_key(exponent):
                parts.append(str(coeff))
            else:
                prefix = "" if coeff == 1 else f"{coeff}*"
                parts.append(f"{prefix}2^({exponent})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SymbolicCount({self})"


def _add_exponents(x: Exponent, y: Exponent) -> Exponent:
    if isinstance(x, int) and isinstance(y, int):
        return x + y
    return _as_exponent(SymbolicCount.coerce(x) + SymbolicCount.coerce(y))


def _compare_exponents(x: Exponent, y: Exponent) -> int:
    if isinstance(x, int) and isinstance(y, int):
        return (x > y) - (x < y)
    return (SymbolicCount.coerce(x) - SymbolicCount.coerce(y)).sign()


def _approx_exponent(exponent: Exponent) -> float:
    if isinstance(exponent, int):
        try:
            return float(exponent)
        except OverflowError:
            return float("inf")
    return exponent.approx_float()


def _log2_int(n: int) -> float:
    if n.bit_length() < 1000:
        return math.log2(n)
    shift = n.bit_length() - 64
    return math.log2(n >> shift) + shift


def _exponent_json(exponent: Exponent) -> Any:
    return exponent if isinstance(exponent, int) else exponent.to_json()
