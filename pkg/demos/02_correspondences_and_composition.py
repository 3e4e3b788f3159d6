"""Morphisms: correspondence classes as multiplicity matrices.

A class X : A -> B is an r x s matrix over N ∪ {INF}; entry (i, j) says how
often source block i acts on the fiber over target block j.  Composition is
matrix multiplication, which is exactly the balanced tensor product of
representatives.
"""

from enchilada import (
    INF,
    CorrClass,
    compose,
    direct_sum,
    identity_corr,
    is_full,
    left_kernel,
    make_algebra,
    phi_injective,
    right_support,
    tensor_is_zero,
)

A = make_algebra([1])
B = make_algebra([1, 1])

# The embedding a -> (a, a) of scalars into C + C.
X = CorrClass(A, B, [[1, 1]])
# Projection onto the first coordinate, as a B-C correspondence.
Y = CorrClass(B, A, [[1], [0]])

print("X =", X)
print("Y =", Y)
print("Y after X =", compose(X, Y))          # the identity class of C
print("identity law:", compose(identity_corr(A), X) == X)

# Supports read the structure off the matrix:
print("\nX is full (support = all of B):", is_full(X))
print("Y has a zero row, so its action kernel is", sorted(left_kernel(Y).members))
print("phi injective for X:", phi_injective(X))
print("right support of Y:", sorted(right_support(Y).members))

# Vanishing composites are a support condition.
X0 = CorrClass(A, B, [[1, 0]])
Z = CorrClass(B, A, [[0], [1]])
print("\nX0 tensor Z vanishes:", tensor_is_zero(X0, Z), "| matrix:", compose(X0, Z))

# Infinite multiplicities are first-class citizens; direct sum is not
# cancellative because of them.
inf_class = CorrClass(A, A, [[INF]])
one = CorrClass(A, A, [[1]])
two = CorrClass(A, A, [[2]])
print("\nINF + 1 == INF + 2:", direct_sum(inf_class, one) == direct_sum(inf_class, two))
print("1 == 2:", one == two)
