"""Elements of the odometer full group as finite step tables.

A full-group element moves each point by a number of odometer steps that
depends only on a finite binary prefix.  This script builds a few
elements, composes them, and measures exact distances.
"""

from odofull import FullGroupElement, distance

T = FullGroupElement.odometer()
identity = FullGroupElement.identity()

# The swap of the two halves: one step forward on [0], one step back on [1].
swap = FullGroupElement(1, [1, -1])
print("swap:", swap)
print("swap is an involution:", swap * swap == identity)

# Composition follows the cocycle identity: steps of the inner factor plus
# steps of the outer factor read at the shifted prefix.
print("swap after one odometer step:", swap * T)
print("one odometer step after swap:", T * swap)
print("these differ, the group is not abelian")

# Tables refine automatically to a common depth.
deep = FullGroupElement(2, [3, 1, -2, 2])
print("composed at depth 2:", deep * swap)

# Distances are exact dyadic rationals.
print("L1 distance swap <-> identity:", distance(swap, identity, 1))
print("uniform distance swap <-> identity:", distance(swap, identity, "uniform"))
print("L3 distance (cubed) deep <-> identity:", distance(deep, identity, 3))

# The L1 metric is right-invariant: composing both sides with the same
# element on the right does not change the distance.
print(
    "right-invariance:",
    distance(swap * deep, T * deep, 1) == distance(swap, T, 1),
)
