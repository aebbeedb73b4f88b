"""First-return maps, Kac sums, elementary involutions, cycle supports.

The first-return map of an element ``u`` to a clopen set ``A`` moves each
point of ``A`` forward along its ``u``-orbit until the orbit re-enters
``A`` and fixes everything else.  At a common depth this is a walk on the
prefix permutation, so return times and the induced step table are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .clopen import ClopenSet, check_depth
from .dyadic import Dyadic
from .element import FullGroupElement
from .errors import EmptySetError, OverlapError, SearchDepthError


@dataclass(frozen=True, eq=False)
class InducedResult:
    """First-return map of an element to a clopen set.

    ``return_times`` maps each member prefix (at ``depth``) to the number
    of applications of the original element before the orbit first
    re-enters the set; the induced step table sums the original steps
    along that orbit segment.  ``meets_every_nontrivial_orbit`` records
    whether the set intersects every prefix cycle carrying a nonzero step,
    the hypothesis under which induction preserves the index.
    """

    element: FullGroupElement
    depth: int
    return_times: dict[int, int] = field(repr=False)
    meets_every_nontrivial_orbit: bool = True

    def return_time_integral(self) -> Dyadic:
        return Dyadic(sum(self.return_times.values()), self.depth)


def induce(u: FullGroupElement, subset: ClopenSet) -> InducedResult:
    """First-return map of ``u`` to ``subset`` (identity off the set)."""
    if subset.is_empty:
        raise EmptySetError("cannot induce on the empty set")
    depth = max(u.depth, subset.depth)
    size = 1 << depth
    steps = u.cocycle_at_depth(depth)
    pi = u.permutation_at_depth(depth)
    member = subset.bits_at_depth(depth)

    table = [0] * size
    return_times: dict[int, int] = {}
    for start in range(size):
        if not (member >> start) & 1:
            continue
        total = steps[start]
        s = pi[start]
        hops = 1
        while not (member >> s) & 1:
            total += steps[s]
            s = pi[s]
            hops += 1
        table[start] = total
        return_times[start] = hops

    meets = True
    seen = [False] * size
    for start in range(size):
        if seen[start]:
            continue
        s = start
        touched = False
        moved = False
        while not seen[s]:
            seen[s] = True
            touched = touched or (member >> s) & 1
            moved = moved or steps[s] != 0
            s = pi[s]
        if moved and not touched:
            meets = False

    return InducedResult(FullGroupElement(depth, table), depth, return_times, meets)


def kac_check(subset: ClopenSet) -> Dyadic:
    """Integral of the odometer's return time to ``subset``; always one."""
    if subset.is_empty:
        raise EmptySetError("return times need a nonempty set")
    result = induce(FullGroupElement.odometer(), subset)
    return result.return_time_integral()


def transposition(subset: ClopenSet) -> FullGroupElement:
    """The involution swapping ``subset`` with its odometer translate.

    Steps are ``+1`` on the set, ``-1`` on its image, zero elsewhere; the
    set must be disjoint from its translate.
    """
    if subset.is_empty:
        return FullGroupElement.identity()
    depth = subset.depth
    size = 1 << depth
    ahead = subset.translate(1)
    if not (subset & ahead).is_empty:
        raise OverlapError("set meets its odometer translate")
    table = [0] * size
    for s in subset.prefixes():
        table[s] = 1
    for s in ahead.prefixes_at_depth(depth):
        table[s] = -1
    return FullGroupElement(depth, table)


def _first_return_cycle(subset: ClopenSet, depth: int) -> list[int]:
    """Member prefixes of ``subset`` at ``depth`` in first-return order.

    The odometer permutes depth-``depth`` prefixes as one full cycle, so
    its first-return map to any nonempty set cycles through the members.
    """
    size = 1 << depth
    member = subset.bits_at_depth(depth)
    start = (member & -member).bit_length() - 1
    order = [start]
    s = (start + 1) % size
    while s != start:
        if (member >> s) & 1:
            order.append(s)
        s = (s + 1) % size
    return order


def oddpart(n: int) -> int:
    return n >> ((n & -n).bit_length() - 1)


def ncycle_support_test(
    subset: ClopenSet, order: int, max_extra_depth: int = 6
) -> tuple[bool, ClopenSet | None]:
    """Search for a piece tiling ``subset`` under its first-return map.

    Looks for a cylinder union ``B`` with ``subset`` equal to the disjoint
    union of ``B`` and its first ``order - 1`` images under the return map
    of the odometer to ``subset`` -- exactly the condition for ``subset``
    to support an ``order``-cycle of the full group.  The return map acts
    on the members at depth ``d + e`` as a single cycle of length
    ``count * 2**e``, so a witness exists at extra depth ``e`` exactly when
    ``order`` divides that length; the witness takes every ``order``-th
    member along the cycle.

    The bounded search is cross-checked against the closed-form criterion
    (the odd part of ``order`` divides the member count): the two can only
    disagree when ``max_extra_depth`` is too small to absorb the two-part
    of ``order``, which raises ``SearchDepthError`` rather than returning
    a silently wrong negative.
    """
    if subset.is_empty:
        raise EmptySetError("an empty set supports no cycles")
    if order < 2:
        raise ValueError("cycle order must be at least 2")
    if max_extra_depth < 0:
        raise ValueError("max_extra_depth must be nonnegative")

    count = subset.cylinder_count()
    for extra in range(max_extra_depth + 1):
        depth = subset.depth + extra
        check_depth(depth)
        if (count << extra) % order:
            continue
        cycle = _first_return_cycle(subset, depth)
        witness = ClopenSet.from_prefixes(depth, cycle[::order])
        return True, witness

    if count % oddpart(order) == 0:
        needed = (order & -order).bit_length() - (count & -count).bit_length()
        raise SearchDepthError(
            f"a witness exists at extra depth {max(0, needed)},"
            f" beyond the searched bound {max_extra_depth}"
        )
    return False, None
