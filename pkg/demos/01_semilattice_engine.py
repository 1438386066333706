# # Enumerating a semilattice from its generators
#
# The engine only needs a join operation and an ordered list of generators.
# Here the elements are positive integers, the join is `lcm`, and the order
# is divisibility.

import math

from nextclosure import GeneratorTable, Semilattice, enumerate_all, first_element, footprint, next_element

lcm = Semilattice(math.lcm)
table = GeneratorTable(lcm, [4, 6, 1, 9])

# The first element is the minimal generator at the largest position.
print("first:", first_element(table))

# Every element is stepped to its lectic successor until none is left.
elements = enumerate_all(table)
print("all:", elements)

# Footprints show why this order is the lectic one: position i is set when
# the i-th generator divides the element, and the footprints ascend
# lexicographically with position 0 most significant.
for e in elements:
    fp = footprint(e, table)
    print(f"{e:>3}  footprint {''.join('1' if fp >> i & 1 else '0' for i in range(len(table)))}")

# Stepping by hand
a, steps = first_element(table), 0
while a is not None:
    a, steps = next_element(a, table), steps + 1
print("steps:", steps)

# A different generator order gives the same elements in a different order.
print("reordered:", enumerate_all(GeneratorTable(lcm, [9, 6, 4, 1])))
