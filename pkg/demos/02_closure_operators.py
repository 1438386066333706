# # Classic Next-Closure as a special case
#
# A closure operator on {0, ..., n-1} works on int bitmasks. Its closed sets
# form a semilattice under X v Y = c(X | Y), generated by the closures of
# the singletons plus c(empty set) at the end.

from nextclosure import ClosureOperator, bits, classic_enumerate, closure_generators, enumerate_all, validate_closure_axioms


def c(a):
    # adding 1 forces 2
    return a | 0b100 if a & 0b010 else a


op = ClosureOperator(3, c)
print("axiom violations:", validate_closure_axioms(op))

classic = classic_enumerate(op)
print("classic:", [bits.to_indices(a) for a in classic])

table = closure_generators(op)
print("generators:", [bits.to_indices(x) for x in table.generators])
generic = enumerate_all(table)
print("generic:", [bits.to_indices(a) for a in generic])
print("same sequence:", classic == generic)

# A broken operator is reported, not rejected.
print(validate_closure_axioms(ClosureOperator(3, lambda a: a & ~1))[:2])
