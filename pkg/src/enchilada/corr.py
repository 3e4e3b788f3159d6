"""Morphisms as multiplicity matrices, with the categorical constructions.

A correspondence class X : A -> B between algebras with r and s blocks is an
r x s matrix over N ∪ {INF}.  Entry (i, j) counts how many times source
block i appears in the left action on the fiber over target block j.  Two
classes with the same endpoints are isomorphic exactly when their matrices
agree, so equality of CorrClass values is isomorphism.  Under this encoding:

  * composition is matrix multiplication (the balanced tensor product),
  * zero rows of X are the blocks annihilated by the left action (ker phi_X),
  * nonzero columns span the right-support ideal (B_X),
  * partial permutation matrices are exactly the Hilbert bimodules,

and the kernel / cokernel / image constructions below are ideal inclusions
and quotient maps read off from those supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import FdCStarAlgebra, IdealRef, make_ideal, quotient
from .cardinal import Cardinal, card
from .errors import ValidationError

__all__ = [
    "CorrClass",
    "identity_corr",
    "zero_corr",
    "compose",
    "direct_sum",
    "right_support",
    "left_kernel",
    "is_full",
    "phi_injective",
    "tensor_is_zero",
    "ideal_inclusion_corr",
    "quotient_corr",
    "kernel",
    "cokernel",
    "schubert_image",
    "schubert_coimage",
    "is_hilbert_bimodule",
    "is_split_mono",
    "is_split_epi",
    "is_invertible",
    "dual",
    "restrict_right",
    "factor_through_quotient",
    "mono_finite_rank_test",
    "epi_finite_rank_test",
]

_ZERO = card(0)
_ONE = card(1)


@dataclass(frozen=True)
class CorrClass:
    """The isomorphism class of a nondegenerate correspondence A -> B."""

    source: FdCStarAlgebra
    target: FdCStarAlgebra
    matrix: tuple[tuple[Cardinal, ...], ...]

    def __post_init__(self):
        r, s = self.source.block_count, self.target.block_count
        rows = tuple(self.matrix)
        if len(rows) != r:
            raise ValidationError(f"matrix has {len(rows)} rows, source has {r} blocks")
        norm = []
        for row in rows:
            row = tuple(card(x) for x in row)
            if len(row) != s:
                raise ValidationError(
                    f"matrix row has {len(row)} entries, target has {s} blocks"
                )
            norm.append(row)
        object.__setattr__(self, "matrix", tuple(norm))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.source.block_count, self.target.block_count)

    @property
    def is_zero(self) -> bool:
        """True for the zero morphism: every entry vanishes."""
        return all(not x for row in self.matrix for x in row)

    @property
    def all_finite(self) -> bool:
        return all(x.is_finite for row in self.matrix for x in row)

    def entry(self, i: int, j: int) -> Cardinal:
        return self.matrix[i][j]

    def __repr__(self) -> str:
        body = "[" + ", ".join(
            "[" + ", ".join(map(repr, row)) + "]" for row in self.matrix
        ) + "]"
        return f"CorrClass({list(self.source.blocks)} -> {list(self.target.blocks)}; {body})"


def identity_corr(a: FdCStarAlgebra) -> CorrClass:
    """The identity morphism: the algebra acting on itself, identity matrix."""
    r = a.block_count
    rows = tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))
    return CorrClass(a, a, rows)


def zero_corr(a: FdCStarAlgebra, b: FdCStarAlgebra) -> CorrClass:
    """The zero morphism A -> B."""
    rows = tuple(tuple(0 for _ in range(b.block_count)) for _ in range(a.block_count))
    return CorrClass(a, b, rows)


def compose(x: CorrClass, y: CorrClass) -> CorrClass:
    """Composition A -> C of X : A -> B with Y : B -> C (tensor over B).

    The matrix is the cardinal product X.matrix * Y.matrix.
    """
    if x.target != y.source:
        raise ValidationError(
            f"cannot compose: first ends at {x.target!r}, second starts at {y.source!r}"
        )
    mid = x.target.block_count
    rows = tuple(
        tuple(
            sum((x.matrix[i][t] * y.matrix[t][j] for t in range(mid)), _ZERO)
            for j in range(y.target.block_count)
        )
        for i in range(x.source.block_count)
    )
    return CorrClass(x.source, y.target, rows)


def direct_sum(x: CorrClass, y: CorrClass) -> CorrClass:
    """Entrywise sum of two classes with the same endpoints.

    Not cancellative: INF + 1 and INF + 2 give the same class.
    """
    if x.source != y.source or x.target != y.target:
        raise ValidationError("direct sum requires equal endpoints")
    rows = tuple(
        tuple(a + b for a, b in zip(xr, yr)) for xr, yr in zip(x.matrix, y.matrix)
    )
    return CorrClass(x.source, x.target, rows)


def right_support(x: CorrClass) -> IdealRef:
    """The ideal B_X of the target spanned by the inner products: nonzero columns."""
    members = {
        j
        for j in range(x.target.block_count)
        if any(x.matrix[i][j] for i in range(x.source.block_count))
    }
    return make_ideal(x.target, members)


def left_kernel(x: CorrClass) -> IdealRef:
    """The kernel of the left-action homomorphism: the all-zero rows."""
    members = {i for i, row in enumerate(x.matrix) if not any(row)}
    return make_ideal(x.source, members)


def is_full(x: CorrClass) -> bool:
    """True when the right support is all of the target."""
    return right_support(x).is_all


def phi_injective(x: CorrClass) -> bool:
    """True when the left action has trivial kernel (no zero rows)."""
    return left_kernel(x).is_zero


def tensor_is_zero(x: CorrClass, y: CorrClass) -> bool:
    """Vanishing of the composite: the right support of X lies in ker phi_Y.

    Equivalent to compose(x, y) being the zero matrix.
    """
    if x.target != y.source:
        raise ValidationError("tensor_is_zero requires composable classes")
    return right_support(x).members <= left_kernel(y).members


def ideal_inclusion_corr(ideal: IdealRef) -> CorrClass:
    """The inclusion of an ideal as a correspondence from its algebra."""
    members = ideal.sorted_members
    s = ideal.parent.block_count
    rows = tuple(tuple(1 if j == m else 0 for j in range(s)) for m in members)
    return CorrClass(ideal.algebra, ideal.parent, rows)


def quotient_corr(b: FdCStarAlgebra, ideal: IdealRef) -> CorrClass:
    """The quotient map B -> B/I as a correspondence."""
    if ideal.parent != b:
        raise ValidationError("ideal does not belong to this algebra")
    survivors = [j for j in range(b.block_count) if j not in ideal.members]
    col_of = {j: c for c, j in enumerate(survivors)}
    rows = tuple(
        tuple(1 if j in col_of and col_of[j] == c else 0 for c in range(len(survivors)))
        for j in range(b.block_count)
    )
    return CorrClass(b, quotient(b, ideal), rows)


def kernel(x: CorrClass) -> CorrClass:
    """A kernel of X: the inclusion of ker phi_X.

    Composing with X gives zero, and any W with W * X = 0 factors through it
    uniquely (by restricting W to the kernel columns).  The kernel of the
    zero morphism is the identity.
    """
    return ideal_inclusion_corr(left_kernel(x))


def cokernel(x: CorrClass) -> CorrClass:
    """A cokernel of X: the quotient map of the target by the right support B_X.

    The cokernel of the zero morphism is the identity (quotient by the zero
    ideal).
    """
    return quotient_corr(x.target, right_support(x))


def schubert_image(x: CorrClass) -> CorrClass:
    """The kernel of the cokernel of X: the inclusion of B_X."""
    return ideal_inclusion_corr(right_support(x))


def schubert_coimage(x: CorrClass) -> CorrClass:
    """The cokernel of the kernel of X: the quotient by ker phi_X."""
    return quotient_corr(x.source, left_kernel(x))


def is_hilbert_bimodule(x: CorrClass) -> bool:
    """True when the class carries a compatible left inner product.

    At finite dimension this happens exactly when the matrix is a partial
    permutation: 0/1 entries with at most one 1 per row and per column.
    Then the supported source blocks act irreducibly on disjoint fibers, so
    the left action maps an ideal isomorphically onto the compact operators
    of the module.
    """
    col_ones = [0] * x.target.block_count
    for row in x.matrix:
        row_ones = 0
        for j, v in enumerate(row):
            if v == _ONE:
                row_ones += 1
                col_ones[j] += 1
            elif v != _ZERO:
                return False
        if row_ones > 1:
            return False
    return all(c <= 1 for c in col_ones)


def is_split_mono(x: CorrClass) -> bool:
    """Split monomorphisms are the left-full Hilbert bimodules.

    Matrix criterion: a partial permutation with no zero row.  The dual
    class is then a one-sided inverse: compose(x, dual(x)) is the identity.
    """
    return is_hilbert_bimodule(x) and left_kernel(x).is_zero


def is_split_epi(x: CorrClass) -> bool:
    """Split epimorphisms are the right-full Hilbert bimodules.

    Matrix criterion: a partial permutation with no zero column.
    """
    return is_hilbert_bimodule(x) and right_support(x).is_all


def is_invertible(x: CorrClass) -> bool:
    """Invertible classes (Morita equivalences): permutation matrices.

    Block sizes need not match; a single 1 between M_2 and M_3 is invertible.
    """
    return is_split_mono(x) and is_split_epi(x)


def dual(x: CorrClass) -> CorrClass:
    """The dual class of a Hilbert bimodule: the transposed matrix.

    Composing on either side recovers the support ideals as diagonal 0/1
    endomorphism matrices: x * dual(x) is the left-support diagonal on the
    source, dual(x) * x the right-support diagonal on the target.  Requesting
    the dual of a non-Hilbert-bimodule class is an error, not a transpose.
    """
    if not is_hilbert_bimodule(x):
        raise ValidationError("dual is only defined for Hilbert bimodule classes")
    r, s = x.shape
    rows = tuple(tuple(x.matrix[i][j] for i in range(r)) for j in range(s))
    return CorrClass(x.target, x.source, rows)


def restrict_right(x: CorrClass, sub: IdealRef) -> CorrClass:
    """Restrict the right-module structure to an ideal containing the support.

    Keeps the columns at the ideal's blocks; composing the result with the
    ideal inclusion recovers X.
    """
    if sub.parent != x.target:
        raise ValidationError("restriction ideal must live in the target algebra")
    if not right_support(x).members <= sub.members:
        raise ValidationError("right support is not contained in the restriction ideal")
    cols = sub.sorted_members
    rows = tuple(tuple(row[j] for j in cols) for row in x.matrix)
    return CorrClass(x.source, sub.algebra, rows)


def factor_through_quotient(x: CorrClass, ideal: IdealRef) -> CorrClass:
    """Factor X through A/I when the ideal acts trivially (I inside ker phi_X).

    Keeps the rows outside the ideal; composing the quotient map with the
    result recovers X.
    """
    if ideal.parent != x.source:
        raise ValidationError("factoring ideal must live in the source algebra")
    if not ideal.members <= left_kernel(x).members:
        raise ValidationError("ideal is not contained in the left kernel")
    rows = tuple(row for i, row in enumerate(x.matrix) if i not in ideal.members)
    return CorrClass(quotient(x.source, ideal), x.target, rows)


def _int_rows(x: CorrClass, what: str) -> list[list[int]]:
    if not x.all_finite:
        raise ValidationError(f"{what} requires finite entries, found INF")
    return [[int(v) for v in row] for row in x.matrix]


def _rational_rank(rows: list[list[int]]) -> int:
    """Exact rank over Q by fraction-arithmetic Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    pivot_row = 0
    for col in range(cols):
        pivot = next((rr for rr in range(pivot_row, len(m)) if m[rr][col]), None)
        if pivot is None:
            continue
        m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        lead = m[pivot_row][col]
        m[pivot_row] = [v / lead for v in m[pivot_row]]
        for rr in range(len(m)):
            if rr != pivot_row and m[rr][col]:
                f = m[rr][col]
                m[rr] = [a - f * b for a, b in zip(m[rr], m[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == len(m):
            break
    return rank


def mono_finite_rank_test(x: CorrClass) -> bool:
    """Left-cancellability against every finite-entry test morphism.

    True exactly when the rows are linearly independent over Q, so G * X and
    H * X can only agree for G = H.  This is a desk-scale probe: it says
    nothing about monomorphism status against tests with infinite
    multiplicities, which remains undecided here.
    """
    rows = _int_rows(x, "mono_finite_rank_test")
    return _rational_rank(rows) == x.source.block_count


def epi_finite_rank_test(x: CorrClass) -> bool:
    """Right-cancellability against every finite-entry test morphism.

    True exactly when the columns are linearly independent over Q.  Quotient
    maps always pass; matrices with a zero column never do.  Like the mono
    probe, this does not settle epimorphism status in the full category:
    full classes such as [[1, 1]] fail right cancellation yet have full
    support.
    """
    rows = _int_rows(x, "epi_finite_rank_test")
    return _rational_rank(rows) == x.target.block_count
