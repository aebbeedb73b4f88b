"""Exact dyadic rationals ``num / 2**exp2``.

Every measure and every metric value in this package is a dyadic rational,
so a dedicated exact type lets all computations avoid floats entirely.
"""

from __future__ import annotations


class Dyadic:
    """An exact dyadic rational ``num / 2**exp2``.

    Instances are canonical (``num`` odd or zero, and zero is ``0 / 2**0``),
    immutable, hashable, totally ordered, and closed under ``+``, ``-``,
    ``*`` and ``abs`` without any rounding.  Plain ``int`` operands mix in
    freely.

    >>> Dyadic(6, 3)
    Dyadic(3, 2)
    >>> Dyadic(1, 2) + Dyadic(1, 2)
    Dyadic(1, 1)
    >>> str(Dyadic(3, 2))
    '3/2^2'
    >>> Dyadic(3, 2) * 4 == 3
    True
    """

    __slots__ = ("num", "exp2")

    def __init__(self, num: int, exp2: int = 0):
        if exp2 < 0:
            raise ValueError("exp2 must be nonnegative")
        if num == 0:
            exp2 = 0
        elif exp2 > 0 and num % 2 == 0:
            shift = min(((num & -num).bit_length() - 1), exp2)
            num >>= shift
            exp2 -= shift
        self.num = num
        self.exp2 = exp2

    # -- conversions ----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return Dyadic(value)
        return NotImplemented

    def as_integer_ratio(self) -> tuple[int, int]:
        return self.num, 1 << self.exp2

    def __float__(self) -> float:
        return self.num / (1 << self.exp2)

    def __bool__(self) -> bool:
        return self.num != 0

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp2})"

    def __str__(self) -> str:
        return f"{self.num}/2^{self.exp2}"

    @classmethod
    def from_string(cls, text: str) -> "Dyadic":
        """Parse ``"p/2^k"`` (or a bare integer string)."""
        text = text.strip()
        if "/" in text:
            num_part, _, den_part = text.partition("/")
            if not den_part.startswith("2^"):
                raise ValueError(f"not a dyadic literal: {text!r}")
            return cls(int(num_part), int(den_part[2:]))
        return cls(int(text))

    # -- arithmetic -----------------------------------------------------

    def _aligned(self, other: "Dyadic") -> tuple[int, int, int]:
        exp2 = max(self.exp2, other.exp2)
        return (
            self.num << (exp2 - self.exp2),
            other.num << (exp2 - other.exp2),
            exp2,
        )

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, exp2 = self._aligned(other)
        return Dyadic(a + b, exp2)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, exp2 = self._aligned(other)
        return Dyadic(a - b, exp2)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Dyadic(self.num * other.num, self.exp2 + other.exp2)

    __rmul__ = __mul__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp2)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.num), self.exp2)

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.exp2 == other.exp2

    def __hash__(self):
        return hash((self.num, self.exp2))

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a <= b

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a > b

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a >= b


ZERO = Dyadic(0)
ONE = Dyadic(1)
