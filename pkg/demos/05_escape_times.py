"""Escape times: return times always integrate to one, escape times do not.

The escape time of a point is the least number of steps, in either
direction, that leaves the set.  Across the tower family below the escape
integrals grow without bound while the measures shrink geometrically,
so no single integrable bound can control escape from small sets.
"""

from odofull import ClopenSet, escape_time, escape_tower_family
from odofull.serialize import escape_rows_to_csv

run = ClopenSet.from_prefixes(2, {0, 1, 2})
result = escape_time(run)
print("escape times from a run of three cylinders:", result.times)
print("integral:", result.integral)

print("\nwhole space:", escape_time(ClopenSet.full()).integral)

print("\ntower family (first 4**m levels of the height 8**m tower):")
rows = escape_tower_family(6)
print(escape_rows_to_csv(rows))

print("integral growth ratios between consecutive rows:")
for previous, current in zip(rows, rows[1:]):
    ratio = float(current.integral) / float(previous.integral)
    print(f"  m={previous.m} -> m={current.m}: {ratio:.3f}")
