# # Row-table enumeration vs classic Next-Closure
#
# The row-table algorithm costs O(|G|^2 |M|) per intent and reads the context
# once; classic Next-Closure on B'' costs O(|G| |M|^2) per intent and reads
# the context on every closure. More objects than attributes favours the
# classic one; more attributes than objects favours the row table.

import time

from nextclosure import enumerate_intents, intents_classic, random_context


def timed(f, K):
    start = time.perf_counter()
    n = len(f(K))
    return n, time.perf_counter() - start


print(f"{'|G|':>4} {'|M|':>4} {'intents':>8} {'rows (s)':>10} {'classic (s)':>12}")
for n_obj, n_att in [(8, 40), (16, 24), (24, 16), (40, 8)]:
    K = random_context(n_obj, n_att, 0.4, seed=n_obj * 100 + n_att)
    n1, t1 = timed(enumerate_intents, K)
    n2, t2 = timed(intents_classic, K)
    assert n1 == n2
    print(f"{n_obj:>4} {n_att:>4} {n1:>8} {t1:>10.4f} {t2:>12.4f}")
