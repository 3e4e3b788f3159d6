"""Kernels, cokernels, and Schubert images as ideal inclusions and quotients.

The kernel of X includes the blocks its left action kills; the cokernel
quotients the target by the right support.  The Schubert image is the kernel
of the cokernel, the coimage the cokernel of the kernel, and every class
factors through both.
"""

from enchilada import (
    CorrClass,
    cokernel,
    compose,
    factor_through_quotient,
    kernel,
    left_kernel,
    make_algebra,
    restrict_right,
    right_support,
    schubert_coimage,
    schubert_image,
    zero_corr,
)

A = make_algebra([1, 1])
B = make_algebra([1, 1])
X = CorrClass(A, B, [[0, 2], [0, 0]])  # block 1 -> fiber 2 with multiplicity 2

print("X =", X)
print("kernel:    ", kernel(X))
print("cokernel:  ", cokernel(X))
print("image:     ", schubert_image(X))
print("coimage:   ", schubert_coimage(X))

# The definitional identities, as plain matrix equalities:
assert schubert_image(X) == kernel(cokernel(X))
assert schubert_coimage(X) == cokernel(kernel(X))

# X factors through its image and its coimage.
through_image = restrict_right(X, right_support(X))
assert compose(through_image, schubert_image(X)) == X
through_coimage = factor_through_quotient(X, left_kernel(X))
assert compose(schubert_coimage(X), through_coimage) == X
print("\nfactorizations through image and coimage recover X: ok")

# The kernel's universal property: anything that annihilates X factors
# through the kernel inclusion, by restricting to the kernel columns.
D = make_algebra([1])
W = CorrClass(D, A, [[0, 3]])  # supported on the killed block
assert compose(W, X).is_zero
members = sorted(left_kernel(X).members)
mediator = CorrClass(D, kernel(X).source, [[W.matrix[0][i] for i in members]])
assert compose(mediator, kernel(X)) == W
print("kernel universal property: mediator is the column restriction", mediator)

# Kernel and cokernel of the zero morphism are identities.
Z = zero_corr(A, B)
print("\nkernel of 0:  ", kernel(Z))
print("cokernel of 0:", cokernel(Z))
