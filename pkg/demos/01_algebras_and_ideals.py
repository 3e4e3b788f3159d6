"""Objects: finite-dimensional C*-algebras as lists of matrix-block sizes.

An algebra here is a direct sum of full matrix blocks, so it is completely
described by its block sizes.  Ideals are block subsets, and quotients just
drop blocks.
"""

from enchilada import algebras_isomorphic, make_algebra, make_ideal, quotient

# C, M_2 + M_3, and the zero algebra
scalars = make_algebra([1])
two_blocks = make_algebra([2, 3])
zero = make_algebra([])

print("C has dimension", scalars.dim)
print("M2 + M3 has dimension", two_blocks.dim)  # 4 + 9 = 13
print("the zero algebra:", zero, "dim", zero.dim)

# Every closed two-sided ideal is spanned by a subset of the blocks.
ideal = make_ideal(two_blocks, {0})  # the M2 summand
print("\nideal blocks:", ideal.algebra)
print("quotient by it:", quotient(two_blocks, ideal))

# Dimensions are additive across an ideal and its quotient.
assert ideal.algebra.dim + quotient(two_blocks, ideal).dim == two_blocks.dim

# Block order matters for indexing, but isomorphism only sees the multiset.
print("\n[1, 2] isomorphic to [2, 1]?", algebras_isomorphic(make_algebra([1, 2]), make_algebra([2, 1])))
print("[1, 1] isomorphic to [2]?  ", algebras_isomorphic(make_algebra([1, 1]), make_algebra([2])))
