"""First-return maps and the return-time integral.

Inducing the odometer on a clopen set gives the first-return map: points
of the set jump forward to their next visit, everything else stays put.
The return time integrates to exactly one, whatever the set.
"""

import random

from odofull import ClopenSet, FullGroupElement, distance, induce, kac_check

T = FullGroupElement.odometer()

half = ClopenSet.from_prefixes(1, {0})
result = induce(T, half)
print("return map to [0]:", result.element)
print("return times:", dict(result.return_times))
print("return-time integral:", result.return_time_integral())

quarter = ClopenSet.from_prefixes(2, {0, 1})
result = induce(T, quarter)
print("\nreturn map to the low quarter:", result.element)
print("its index matches the odometer's:", result.element.index())

# The integral is one for every nonempty set, here a few random ones.
rng = random.Random(0)
for _ in range(5):
    depth = rng.randint(3, 8)
    bits = rng.getrandbits(1 << depth) or 1
    subset = ClopenSet(depth, bits)
    print(
        f"random set at depth {subset.depth} with {subset.cylinder_count()}"
        f" cylinders: integral {kac_check(subset)}"
    )

# Inducing never increases the L1 distance to the identity.
identity = FullGroupElement.identity()
u = FullGroupElement(2, [3, 1, -2, 2])
induced = induce(u, half).element
print("\ndistance before inducing:", distance(u, identity, 1))
print("distance after inducing:", distance(induced, identity, 1))
