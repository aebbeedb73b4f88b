"""Escape times of clopen sets and the diverging tower family.

The escape time of a point of ``A`` is the least number of odometer steps,
forward or backward, that leaves ``A``.  Return times always integrate to
one, but escape integrals can be made arbitrarily large on sets of
arbitrarily small measure; :func:`escape_tower_family` realizes that
mechanism exactly with dyadic tower heights.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .clopen import ClopenSet, check_depth, depth_cap
from .dyadic import Dyadic
from .errors import DepthCapError, EmptySetError


class _Infinite:
    """Sentinel for an infinite escape time or integral."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


@dataclass(frozen=True, eq=False)
class EscapeResult:
    """Escape times per member prefix and their exact integral."""

    depth: int
    times: dict = field(repr=False)
    integral: object

    @property
    def is_infinite(self) -> bool:
        return self.integral is INFINITE


def escape_time(subset: ClopenSet) -> EscapeResult:
    """Escape time table of ``subset`` under the odometer.

    ``times[s]`` is the least ``k >= 1`` with ``s + k`` or ``s - k``
    (mod ``2**d``) outside the set; it is infinite exactly when the set is
    the whole space.  Escape only depends on the maximal run of
    consecutive members around ``s``: within a run it costs ``min`` of the
    distances past either end.
    """
    if subset.is_empty:
        raise EmptySetError("escape times need a nonempty set")
    if subset.is_full:
        return EscapeResult(0, {0: INFINITE}, INFINITE)

    depth = subset.depth
    size = 1 << depth
    members = subset.prefixes()

    runs = []
    start = prev = members[0]
    for s in members[1:]:
        if s == prev + 1:
            prev = s
        else:
            runs.append((start, prev))
            start = prev = s
    runs.append((start, prev))
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][1] == size - 1:
        # one cyclic run through position 0, tracked past the table end
        first = runs.pop(0)
        last = runs.pop()
        runs.append((last[0], first[1] + size))

    times = {}
    total = 0
    for a, b in runs:
        for s in range(a, b + 1):
            tau = min(s - a + 1, b - s + 1)
            times[s % size] = tau
            total += tau
    return EscapeResult(depth, times, Dyadic(total, depth))


@dataclass(frozen=True)
class EscapeRow:
    m: int
    depth: int
    measure: Dyadic
    integral: Dyadic


def escape_tower_family(m_max: int) -> tuple[EscapeRow, ...]:
    """Escape integrals of an odometer tower family with shrinking bases.

    Row ``m`` takes the first ``4**m`` levels of the height-``8**m``
    odometer tower over the base cylinder, i.e. prefixes ``0 .. 4**m - 1``
    at depth ``3m``.  The measures ``2**-m`` shrink geometrically while the
    escape integrals grow without bound: escape from a run of ``K``
    consecutive levels costs ``min(s + 1, K - s)`` steps, a sum quadratic
    in ``K``.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    if 3 * m_max > depth_cap():
        raise DepthCapError(f"family needs depth {3 * m_max}, cap is {depth_cap()}")
    rows = []
    for m in range(1, m_max + 1):
        depth = 3 * m
        check_depth(depth)
        levels = ClopenSet.from_prefixes(depth, range(4**m))
        rows.append(
            EscapeRow(m, depth, levels.measure(), escape_time(levels).integral)
        )
    return tuple(rows)
