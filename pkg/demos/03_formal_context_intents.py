# # Intents of a formal context
#
# The intents form a semilattice under intersection, generated by the object
# rows {g}'. The enumeration starts with the full attribute set and only
# reads the context once, to build the row table.

from nextclosure import (
    FormalContext,
    clarify_reduce_objects,
    enumerate_extents,
    enumerate_intents,
    instrumented_next_intent,
    intents_classic,
    object_intent_rows,
    parse_cxt,
    write_cxt,
)

K = parse_cxt("B\n\n3\n3\n\ng0\ng1\ng2\nm0\nm1\nm2\nXX.\n.XX\nX.X\n")
print(K)

for b in enumerate_intents(K):
    print("intent:", K.attribute_names(b))

# Same intents from classic Next-Closure on B -> B'', in attribute-lectic order.
print("classic:", [K.attribute_names(b) for b in intents_classic(K)])

# Extents come from the transposed context.
print("extents:", [K.object_names(a) for a in enumerate_extents(K)])

# Redundant objects are removed first: g3 duplicates g0, g4 is g0 and g1 intersected.
K2 = FormalContext.from_sets([[0, 1], [1, 2], [0, 2], [0, 1], [1]], 3)
print(write_cxt(clarify_reduce_objects(K2)))

# Each step costs at most 2|G|^2 + |G| superset tests.
K.reads = 0
table = object_intent_rows(K)
print("reads to build the table:", K.reads)
a = table.full
while a is not None:
    a, counters = instrumented_next_intent(table, a)
    print(counters)
print("reads afterwards:", K.reads)
