"""Next-Closure on finite semilattices, closure operators and formal contexts."""

from .closure import (
    ClosureOperator,
    brute_force_closed,
    classic_enumerate,
    classic_next,
    classic_plus,
    closure_generators,
    validate_closure_axioms,
)
from .context import (
    FormalContext,
    ObjectIntentTable,
    clarify_reduce_objects,
    derive_attributes,
    derive_objects,
    enumerate_extents,
    enumerate_intents,
    instrumented_next_intent,
    intent_closure,
    intents_classic,
    next_intent,
    object_intent_rows,
)
from .corpus import random_context
from .cxt import CxtError, parse_cxt, write_cxt
from .semilattice import (
    INTERSECTION,
    UNION,
    GeneratorTable,
    LecticOrdering,
    Order,
    Semilattice,
    delta,
    enumerate_all,
    first_element,
    footprint,
    generated_semilattice,
    join_irreducibles,
    lectic_compare,
    next_element,
    plus,
)

__version__ = "0.1.0"
