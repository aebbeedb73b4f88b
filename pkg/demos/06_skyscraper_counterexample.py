"""Two metrics on the same transformations that disagree badly.

On the height 4**n tower, the crossing involution swaps the first half of
every 2**n-th level with the second half.  Its ambient distance to the
identity is exactly 1/2 for every n, but measured in steps of the return
map to the selected levels it is only 2**-(n+1): the first column cannot
be summed, the second one can.
"""

from odofull import (
    TowerElement,
    counterexample_element,
    counterexample_report,
    tower_metric,
)
from odofull.serialize import counterexample_to_csv

u1 = counterexample_element(1)
print("n=1 element moves:", dict(u1.moves[0]))
identity = TowerElement.identity(u1.system)
print("ambient distance:", tower_metric(u1, identity))
print("distance in return-map steps:", tower_metric(u1, identity, induced_on=[[0, 2]]))
print("involution:", (u1 * u1).is_identity)

print("\nfull table:")
print(counterexample_to_csv(counterexample_report(10)))

report = counterexample_report(10)
total = report.rows[0].induced_distance
for row in report.rows[1:]:
    total = total + row.induced_distance
print("sum of the induced column:", total)
print("the ambient column contributes 1/2 per row and diverges with the table length")
