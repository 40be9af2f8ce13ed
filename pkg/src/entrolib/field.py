"""Exact scalars: arbitrary-precision rationals and prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch

_PRIME_CAP = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient domain: the rationals (p is None) or F_p for a prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (2 <= self.p < _PRIME_CAP):
                raise ValueError(f"prime must lie in [2, 2^31), got {self.p}")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def kind(self) -> str:
        return "Q" if self.p is None else "Fp"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch(f"element of {value.spec} used in {self}")
            return value
        return FieldElement(self, value)

    def from_fraction(self, num: int, den: int) -> "FieldElement":
        """num/den as a field element; den must be invertible."""
        if den == 0 or (self.p is not None and den % self.p == 0):
            raise DivisionByZero("zero denominator")
        if self.p is None:
            return FieldElement(self, Fraction(num, den))
        return FieldElement(self, num * pow(den, -1, self.p))

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"


class FieldElement:
    """A canonical scalar: reduced fraction over Q, least residue over F_p."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        self.spec = spec
        if spec.p is None:
            self.value = value if isinstance(value, Fraction) else Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator % spec.p == 0:
                    raise DivisionByZero("fraction with denominator divisible by p")
                value = value.numerator * pow(value.denominator, -1, spec.p)
            self.value = value % spec.p

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"mixed fields {self.spec} and {other.spec}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.spec, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, -self.value)

    def inv(self) -> "FieldElement":
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        if self.spec.p is None:
            return FieldElement(self.spec, 1 / self.value)
        return FieldElement(self.spec, pow(self.value, -1, self.spec.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        if self.spec.p is None:
            return FieldElement(self.spec, self.value ** n)
        return FieldElement(self.spec, pow(self.value, n, self.spec.p))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == FieldElement(self.spec, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.spec}({self.value})"
