"""The integer index and the cycle structure of prefix permutations.

The index of an element is the average of its step table, always an exact
integer, and adds under composition.  The cycle decomposition of the
prefix permutation sorts the dynamics into periodic, positive and negative
parts by the sign of each cycle's step sum.
"""

import random

from odofull import FullGroupElement, commutator, random_element

T = FullGroupElement.odometer()

u = FullGroupElement(2, [3, 1, -2, 2])
print("element:", u)
print("index:", u.index())

for cycle in u.orbit_decomposition().cycles:
    print(
        f"cycle {cycle.prefixes}: displacement {cycle.displacement},"
        f" kind {cycle.kind}"
    )

three_cycle = FullGroupElement(2, [1, 1, -2, 0])
print("\nperiodic element:", three_cycle)
print("is periodic:", three_cycle.is_periodic(), "period:", three_cycle.period())
print("its cube is the identity:", (three_cycle**3).is_identity)
print("periodic elements have index zero:", three_cycle.index())

# The index is a homomorphism onto the integers; commutators land in its
# kernel.  Check on reproducible random draws.
rng = random.Random(1)
for _ in range(5):
    a = random_element(rng.randint(0, 8), 4, rng=rng)
    b = random_element(rng.randint(0, 8), 4, rng=rng)
    print(
        f"index(a)={a.index():4d} index(b)={b.index():4d}"
        f" index(ab)={(a * b).index():4d}"
        f" index([a,b])={commutator(a, b).index()}"
    )
