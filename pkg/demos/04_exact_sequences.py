"""Exactness: image of the incoming arrow = kernel of the outgoing one.

For 0 -> A -> B -> C -> 0 this reduces to three conditions: the left action
on X is faithful, B_X = ker phi_Y, and Y is full.  The checker reports the
conditions next to the per-node verdicts.
"""

import json

from enchilada import (
    CorrClass,
    SequenceSpec,
    ZERO_ALGEBRA,
    check_sequence,
    check_short_exact,
    make_algebra,
    zero_corr,
)
from enchilada.jsonio import sequence_to_json

A = make_algebra([1])
B = make_algebra([1, 1])
C = make_algebra([1])

# The ideal inclusion / quotient pair: 0 -> C -> C+C -> C -> 0.
X = CorrClass(A, B, [[1, 0]])
Y = CorrClass(B, C, [[0], [1]])

report = check_short_exact(X, Y)
print("exact:", report.exact)
for cond in report.conditions:
    print(f"  {cond.name}: {cond.holds}")

# Break it in the middle: a full X overshoots ker phi_Y.
bad = check_short_exact(CorrClass(A, B, [[1, 1]]), Y)
print("\nbroken version exact:", bad.exact, "| violated:", bad.failing())

# Longer chains check every interior node.
chain = SequenceSpec(
    (ZERO_ALGEBRA, A, B, C, ZERO_ALGEBRA),
    (zero_corr(ZERO_ALGEBRA, A), X, Y, zero_corr(C, ZERO_ALGEBRA)),
)
print("\npadded chain exact:", check_sequence(chain).exact)

# The same chain as it would appear in a JSON input file for the CLI:
print("\nJSON form of the chain:")
print(json.dumps(sequence_to_json(chain), indent=2)[:400], "...")
