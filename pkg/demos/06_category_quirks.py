"""A tour of the category's strange corners, via the built-in gallery.

Highlights: a full morphism whose image is the identity subobject yet which
is not an epimorphism; non-cancellative direct sums; kernels that are always
split monomorphisms; and the finite-entry cancellation probes with their
caveats.
"""

from enchilada import (
    GALLERY_NAMES,
    CorrClass,
    compose,
    epi_finite_rank_test,
    gallery,
    identity_corr,
    is_split_mono,
    make_algebra,
    mono_finite_rank_test,
)

for name in GALLERY_NAMES:
    transcript = gallery(name)
    print(f"{transcript.name}: {'PASS' if transcript.passed else 'FAIL'}")
    print(f"  ({transcript.title})")
    for step in transcript.steps:
        print(f"    [{'ok' if step.passed else 'XX'}] {step.label}")

# The finite-entry probes are desk-scale evidence, not theorems: they
# quantify only over finite-multiplicity test morphisms.
A, B = make_algebra([1]), make_algebra([1, 1])
X = CorrClass(A, B, [[1, 1]])
print("\n[[1, 1]]: left-cancellation probe:", mono_finite_rank_test(X))
print("[[1, 1]]: right-cancellation probe:", epi_finite_rank_test(X))

# A caution on one-sided inverses: [[1, 1]] composed with [[1], [0]] is the
# identity class, so it has a one-sided inverse even though it is not a
# left-full partial permutation (is_split_mono tracks the latter).
M = CorrClass(B, A, [[1], [0]])
print("\n[[1, 1]] * [[1], [0]] =", compose(X, M))
print("equals identity:", compose(X, M) == identity_corr(A))
print("is_split_mono([[1, 1]]):", is_split_mono(X))
