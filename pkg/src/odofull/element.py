"""Elements of the topological full group of the dyadic odometer.

An element is a transformation that moves every point by a number of
odometer steps depending only on the first ``d`` coordinates: it is stored
as an integer table ``n(s)`` over the ``2**d`` prefixes.  The table defines
a bijection of the space exactly when ``s -> (s + n(s)) mod 2**d`` permutes
the prefixes; points of the cylinder ``s`` then land in the cylinder
``(s + n(s)) mod 2**d`` with their tails transformed bijectively, so the
prefix permutation carries all of the combinatorics.

Because the odometer is aperiodic, the step table of a transformation is
unique, and the canonical minimal-depth table is a complete invariant:
equality of elements is equality of canonical tables.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import lcm

from .clopen import ClopenSet, check_depth
from .dyadic import Dyadic
from .errors import NotBijectiveError

TRIVIAL = "trivial"
PERIODIC = "periodic"
POSITIVE = "positive"
NEGATIVE = "negative"


class FullGroupElement:
    """A full-group element given by its step table at some depth.

    The constructor validates bijectivity and reduces the table to minimal
    depth, so any two constructions of the same transformation compare
    equal.  Values are immutable; all operations return new elements.
    """

    __slots__ = ("depth", "cocycle")

    def __init__(self, depth: int, cocycle):
        check_depth(depth)
        table = tuple(cocycle)
        size = 1 << depth
        if len(table) != size:
            raise ValueError(f"table length {len(table)} != 2**{depth}")
        _check_bijective(depth, table)
        while depth > 0:
            half = 1 << (depth - 1)
            if table[:half] != table[half:]:
                break
            table = table[:half]
            depth -= 1
        self.depth = depth
        self.cocycle = table

    @classmethod
    def identity(cls) -> "FullGroupElement":
        return cls(0, (0,))

    @classmethod
    def odometer(cls, power: int = 1) -> "FullGroupElement":
        """The odometer itself (or the given power of it)."""
        return cls(0, (power,))

    # -- refinement --------------------------------------------------------

    def cocycle_at_depth(self, depth: int) -> tuple[int, ...]:
        """Step table refined to ``depth >= self.depth``.

        A depth-``d+1`` prefix restricts to the depth-``d`` prefix
        ``s mod 2**d``, so refining one level concatenates the table with
        itself.
        """
        if depth < self.depth:
            raise ValueError("cannot coarsen below the canonical depth")
        check_depth(depth)
        return self.cocycle * (1 << (depth - self.depth))

    def permutation_at_depth(self, depth: int) -> list[int]:
        table = self.cocycle_at_depth(depth)
        size = 1 << depth
        return [(s + n) % size for s, n in enumerate(table)]

    # -- group structure -----------------------------------------------------

    def __mul__(self, other: "FullGroupElement") -> "FullGroupElement":
        """Composition ``self * other``: apply ``other`` first.

        On the cylinder ``s`` the inner factor moves by ``n_other(s)`` into
        the cylinder ``pi_other(s)``, where the outer factor adds its own
        step count.
        """
        if not isinstance(other, FullGroupElement):
            return NotImplemented
        depth = max(self.depth, other.depth)
        size = 1 << depth
        outer = self.cocycle_at_depth(depth)
        inner = other.cocycle_at_depth(depth)
        table = [n + outer[(s + n) % size] for s, n in enumerate(inner)]
        return FullGroupElement(depth, table)

    def inverse(self) -> "FullGroupElement":
        size = 1 << self.depth
        table = [0] * size
        for s, n in enumerate(self.cocycle):
            table[(s + n) % size] = -n
        return FullGroupElement(self.depth, table)

    def __pow__(self, power: int) -> "FullGroupElement":
        if power < 0:
            return self.inverse() ** (-power)
        result = FullGroupElement.identity()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, FullGroupElement):
            return NotImplemented
        return self.depth == other.depth and self.cocycle == other.cocycle

    def __hash__(self):
        return hash((self.depth, self.cocycle))

    def __repr__(self):
        return f"FullGroupElement(depth={self.depth}, cocycle={list(self.cocycle)})"

    @property
    def is_identity(self) -> bool:
        return self.depth == 0 and self.cocycle == (0,)

    # -- invariants -----------------------------------------------------------

    def index(self) -> int:
        """Average step count, always an exact integer.

        ``n(s) = pi(s) - s (mod 2**d)`` summed over a permutation makes the
        total divisible by ``2**d``.
        """
        total = sum(self.cocycle)
        quotient, remainder = divmod(total, 1 << self.depth)
        assert remainder == 0, "cocycle sum of a valid element is divisible"
        return quotient

    def support(self) -> ClopenSet:
        """Union of the cylinders the element moves.

        Aperiodicity of the odometer means a nonzero step moves every point
        of its cylinder.
        """
        bits = 0
        for s, n in enumerate(self.cocycle):
            if n:
                bits |= 1 << s
        return ClopenSet(self.depth, bits)

    def image_of(self, subset: ClopenSet) -> ClopenSet:
        """Image of a clopen set under the element."""
        depth = max(self.depth, subset.depth)
        pi = self.permutation_at_depth(depth)
        bits = subset.bits_at_depth(depth)
        out = 0
        while bits:
            low = bits & -bits
            out |= 1 << pi[low.bit_length() - 1]
            bits ^= low
        return ClopenSet(depth, out)

    def orbit_decomposition(self) -> "OrbitDecomposition":
        """Cycle structure of the prefix permutation, with displacements."""
        size = 1 << self.depth
        table = self.cocycle
        seen = [False] * size
        cycles = []
        for start in range(size):
            if seen[start]:
                continue
            prefixes = []
            displacement = 0
            moved = False
            s = start
            while not seen[s]:
                seen[s] = True
                prefixes.append(s)
                n = table[s]
                displacement += n
                moved = moved or n != 0
                s = (s + n) % size
            if displacement > 0:
                kind = POSITIVE
            elif displacement < 0:
                kind = NEGATIVE
            elif moved:
                kind = PERIODIC
            else:
                kind = TRIVIAL
            cycles.append(OrbitCycle(tuple(prefixes), displacement, kind))
        return OrbitDecomposition(self.depth, tuple(cycles))

    def is_periodic(self) -> bool:
        """True when every point has a finite orbit.

        A prefix cycle of displacement zero gives its points period equal
        to the cycle length; nonzero displacement makes the step sums drift
        to infinity.
        """
        return all(c.displacement == 0 for c in self.orbit_decomposition().cycles)

    def period(self) -> int | None:
        """Least ``L`` with ``self**L`` trivial, or ``None`` if aperiodic."""
        cycles = self.orbit_decomposition().cycles
        if any(c.displacement != 0 for c in cycles):
            return None
        return lcm(*(len(c.prefixes) for c in cycles if c.kind != TRIVIAL), 1)


def _check_bijective(depth: int, table) -> None:
    size = 1 << depth
    hit_by = [-1] * size
    for s, n in enumerate(table):
        if not isinstance(n, int):
            raise TypeError("cocycle entries must be integers")
        target = (s + n) % size
        if hit_by[target] >= 0:
            raise NotBijectiveError(
                f"prefixes {hit_by[target]} and {s} both map to {target}"
            )
        hit_by[target] = s


@dataclass(frozen=True)
class OrbitCycle:
    """One cycle of the prefix permutation.

    ``prefixes`` lists the orbit in order starting from its least prefix,
    ``displacement`` is the step sum along the cycle, and ``kind``
    classifies it: ``trivial`` (all steps zero), ``periodic`` (zero sum,
    some step nonzero), ``positive`` or ``negative`` (sign of the sum).
    """

    prefixes: tuple[int, ...]
    displacement: int
    kind: str


@dataclass(frozen=True)
class OrbitDecomposition:
    depth: int
    cycles: tuple[OrbitCycle, ...]

    def of_kind(self, kind: str) -> tuple[OrbitCycle, ...]:
        return tuple(c for c in self.cycles if c.kind == kind)


def commutator(u: FullGroupElement, v: FullGroupElement) -> FullGroupElement:
    return u * v * u.inverse() * v.inverse()


def distance(u: FullGroupElement, v: FullGroupElement, p=1) -> Dyadic:
    """Exact distance between two elements.

    ``p = 1`` integrates ``|n_u - n_v|`` (the walk metric on orbits gives
    displacement ``|k|`` for ``k`` odometer steps); ``p = "uniform"``
    measures the set where the elements disagree; integer ``p >= 2``
    returns the ``p``-th power of the L^p distance, which keeps the value
    dyadic.
    """
    depth = max(u.depth, v.depth)
    a = u.cocycle_at_depth(depth)
    b = v.cocycle_at_depth(depth)
    if p == "uniform":
        total = sum(1 for x, y in zip(a, b) if x != y)
    elif p == 1:
        total = sum(abs(x - y) for x, y in zip(a, b))
    elif isinstance(p, int) and p >= 2:
        total = sum(abs(x - y) ** p for x, y in zip(a, b))
    else:
        raise ValueError(f"p must be 1, an integer >= 2, or 'uniform': {p!r}")
    return Dyadic(total, depth)


def random_element(
    depth: int,
    wrap_bound: int = 0,
    seed: int | None = None,
    rng: random.Random | None = None,
) -> FullGroupElement:
    """Uniform random element among depth-``depth`` tables with bounded wraps.

    Draws a uniform prefix permutation ``pi`` and independent wrap counts
    ``w(s)`` in ``[-wrap_bound, wrap_bound]``, and sets
    ``n(s) = (pi(s) - s) mod 2**d + 2**d * w(s)``.  This parameterization
    is a bijection onto the valid depth-``d`` tables with those wraps, and
    the output is deterministic for a fixed seed.
    """
    check_depth(depth)
    if wrap_bound < 0:
        raise ValueError("wrap_bound must be nonnegative")
    if rng is None:
        rng = random.Random(seed)
    size = 1 << depth
    pi = list(range(size))
    rng.shuffle(pi)
    table = [(pi[s] - s) % size for s in range(size)]
    if wrap_bound:
        wraps = rng.choices(range(-wrap_bound, wrap_bound + 1), k=size)
        table = [n + size * w for n, w in zip(table, wraps)]
    return FullGroupElement(depth, table)
