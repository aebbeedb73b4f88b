"""Clopen subsets of the binary Cantor space, as unions of cylinders.

A depth-``d`` cylinder fixes the first ``d`` binary coordinates of a
sequence.  Prefixes are encoded little-endian (coordinate ``i`` contributes
``2**i``), which turns the odometer -- add one and carry to the right --
into the successor map ``s -> s + 1 mod 2**d`` on depth-``d`` prefixes.
All set dynamics then reduce to modular arithmetic on prefix integers.

A clopen set is stored as a packed bitmask over the ``2**d`` prefixes at
its minimal representing depth, so boolean operations, popcounts and
translations are word-parallel on Python's big integers.
"""

from __future__ import annotations

import os

from .dyadic import Dyadic
from .errors import DepthCapError

DEFAULT_DEPTH_CAP = 24
DEPTH_CAP_ENV = "ERGO_DEPTH_CAP"


def depth_cap() -> int:
    """Largest allowed table depth; override with ``ERGO_DEPTH_CAP``."""
    raw = os.environ.get(DEPTH_CAP_ENV)
    if raw is None:
        return DEFAULT_DEPTH_CAP
    try:
        return int(raw)
    except ValueError:
        raise DepthCapError(f"bad {DEPTH_CAP_ENV} value: {raw!r}") from None


def check_depth(depth: int) -> None:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    cap = depth_cap()
    if depth > cap:
        raise DepthCapError(f"depth {depth} exceeds cap {cap}")


class ClopenSet:
    """A finite union of cylinder sets, canonical at minimal depth.

    ``bits`` has bit ``s`` set exactly when the depth-``depth`` cylinder
    with prefix ``s`` belongs to the set.  The constructor reduces to the
    least depth at which the set is a union of cylinders, so equal sets
    always compare equal regardless of how they were built.
    """

    __slots__ = ("depth", "bits")

    def __init__(self, depth: int, bits: int):
        check_depth(depth)
        if bits < 0 or bits >> (1 << depth):
            raise ValueError("bit table does not fit the given depth")
        while depth > 0:
            half = 1 << (depth - 1)
            low = bits & ((1 << half) - 1)
            if bits >> half != low:
                break
            bits = low
            depth -= 1
        self.depth = depth
        self.bits = bits

    @classmethod
    def from_prefixes(cls, depth: int, prefixes) -> "ClopenSet":
        """Union of the depth-``depth`` cylinders with the given prefixes."""
        check_depth(depth)
        size = 1 << depth
        bits = 0
        for s in prefixes:
            if not 0 <= s < size:
                raise ValueError(f"prefix {s} out of range at depth {depth}")
            bits |= 1 << s
        return cls(depth, bits)

    @classmethod
    def empty(cls) -> "ClopenSet":
        return cls(0, 0)

    @classmethod
    def full(cls) -> "ClopenSet":
        return cls(0, 1)

    # -- basic queries ----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_full(self) -> bool:
        return self.depth == 0 and self.bits == 1

    def cylinder_count(self) -> int:
        """Number of member cylinders at the canonical depth."""
        return self.bits.bit_count()

    def measure(self) -> Dyadic:
        """Mass under the odometer-invariant measure (``2**-d`` per cylinder)."""
        return Dyadic(self.bits.bit_count(), self.depth)

    def prefixes(self) -> tuple[int, ...]:
        """Member prefixes at the canonical depth, ascending."""
        bits = self.bits
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def bits_at_depth(self, depth: int) -> int:
        """Membership bitmask refined to ``depth >= self.depth``.

        Refining one level appends a free coordinate, which duplicates the
        mask into the upper half of the prefix range.
        """
        if depth < self.depth:
            raise ValueError("cannot coarsen below the canonical depth")
        check_depth(depth)
        bits = self.bits
        size = 1 << self.depth
        for _ in range(depth - self.depth):
            bits |= bits << size
            size <<= 1
        return bits

    def prefixes_at_depth(self, depth: int) -> tuple[int, ...]:
        bits = self.bits_at_depth(depth)
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    # -- boolean algebra ---------------------------------------------------

    def _common(self, other: "ClopenSet") -> tuple[int, int, int]:
        depth = max(self.depth, other.depth)
        return depth, self.bits_at_depth(depth), other.bits_at_depth(depth)

    def __or__(self, other: "ClopenSet") -> "ClopenSet":
        depth, a, b = self._common(other)
        return ClopenSet(depth, a | b)

    def __and__(self, other: "ClopenSet") -> "ClopenSet":
        depth, a, b = self._common(other)
        return ClopenSet(depth, a & b)

    def __sub__(self, other: "ClopenSet") -> "ClopenSet":
        depth, a, b = self._common(other)
        return ClopenSet(depth, a & ~b)

    def __invert__(self) -> "ClopenSet":
        full = (1 << (1 << self.depth)) - 1
        return ClopenSet(self.depth, self.bits ^ full)

    def __eq__(self, other):
        if not isinstance(other, ClopenSet):
            return NotImplemented
        return self.depth == other.depth and self.bits == other.bits

    def __hash__(self):
        return hash((self.depth, self.bits))

    def __repr__(self):
        return f"ClopenSet(depth={self.depth}, prefixes={list(self.prefixes())})"

    # -- odometer action ---------------------------------------------------

    def translate(self, steps: int) -> "ClopenSet":
        """Image under ``steps`` odometer applications.

        The odometer carries through any fixed prefix, so the image of the
        cylinder with prefix ``s`` is the cylinder with prefix
        ``(s + steps) mod 2**d``: a cyclic rotation of the bitmask.
        """
        size = 1 << self.depth
        k = steps % size
        if k == 0:
            return self
        full = (1 << size) - 1
        bits = ((self.bits << k) | (self.bits >> (size - k))) & full
        return ClopenSet(self.depth, bits)


def boolean_op(op: str, a: ClopenSet, b: ClopenSet | None = None) -> ClopenSet:
    """Dispatch a boolean operation by name."""
    if op == "complement":
        return ~a
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "union":
        return a | b
    if op == "intersection":
        return a & b
    if op == "difference":
        return a - b
    raise ValueError(f"unknown boolean operation {op!r}")
