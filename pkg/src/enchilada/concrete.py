"""Numeric correspondences: block-matrix Hilbert modules with explicit actions.

Every Hilbert module over B = M_{m_1} + ... + M_{m_s} is, up to unitary, a
tuple of rectangular matrix spaces C^{d_j x m_j} with the canonical inner
product <x, y> = x_j^* y_j and right action by matrix multiplication.  A
concrete correspondence stores such a module together with the images of
every source matrix unit under the left action.

This module is the measurement side of the package: tensor products are
computed through an explicit Gram quotient and multiplicities through
traces of minimal-projection images, so the symbolic matrix calculus can be
cross-checked against floating-point reality instead of against itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import FdCStarAlgebra
from .corr import CorrClass, dual as dual_class, is_hilbert_bimodule
from .errors import ValidationError

__all__ = [
    "ConcreteModule",
    "ConcreteCorr",
    "AxiomCheck",
    "ValidationReport",
    "InteriorTensor",
    "realize",
    "validate",
    "classify",
    "interior_tensor",
    "interior_tensor_norm",
    "is_isomorphic",
    "dual_concrete",
    "rank_one",
    "compacts_span_defect",
    "algebra_unit",
    "algebra_basis",
    "matrix_unit",
    "GRAM_NULL_TOL",
    "CLASSIFY_TOL",
    "VALIDATE_TOL",
]

# Singular values of the scalarized Gram form below this (relative) cutoff
# are treated as null when passing to the Hausdorff quotient.
GRAM_NULL_TOL = 1e-7
# A projection trace must be within this distance of an integer.
CLASSIFY_TOL = 1e-6
VALIDATE_TOL = 1e-9

Element = tuple[np.ndarray, ...]
AlgebraElement = tuple[np.ndarray, ...]


def _max_abs(arr: np.ndarray) -> float:
    if arr.size == 0:
        return 0.0
    return float(np.abs(arr).max())


def algebra_unit(a: FdCStarAlgebra) -> AlgebraElement:
    """The unit of the algebra as a tuple of identity blocks."""
    return tuple(np.eye(n, dtype=complex) for n in a.blocks)


def algebra_basis(a: FdCStarAlgebra) -> list[AlgebraElement]:
    """All matrix units of the algebra, ordered by block, row, column."""
    out = []
    for i, n in enumerate(a.blocks):
        for p in range(n):
            for q in range(n):
                out.append(matrix_unit(a, i, p, q))
    return out


def matrix_unit(a: FdCStarAlgebra, block: int, p: int, q: int) -> AlgebraElement:
    """The matrix unit e_{pq} of one block, zero elsewhere."""
    elt = []
    for i, n in enumerate(a.blocks):
        m = np.zeros((n, n), dtype=complex)
        if i == block:
            m[p, q] = 1.0
        elt.append(m)
    return tuple(elt)


@dataclass(frozen=True)
class ConcreteModule:
    """A Hilbert module over a block algebra, in canonical rectangular form.

    Elements are tuples of complex d_j x m_j matrices, one per target block;
    the inner product is <x, y> = x_j^* y_j and the right action is matrix
    multiplication.
    """

    target: FdCStarAlgebra
    fiber_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.fiber_dims)
        if len(dims) != self.target.block_count:
            raise ValidationError("one fiber dimension per target block required")
        for d in dims:
            if isinstance(d, bool) or not isinstance(d, int) or d < 0:
                raise ValidationError(f"fiber dimensions must be non-negative, got {d!r}")
        object.__setattr__(self, "fiber_dims", dims)

    @property
    def dim(self) -> int:
        return sum(d * m for d, m in zip(self.fiber_dims, self.target.blocks))

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def as_element(self, x) -> Element:
        """Coerce and shape-check a tuple of fiber matrices."""
        x = tuple(np.asarray(xj, dtype=complex) for xj in x)
        if len(x) != self.target.block_count:
            raise ValidationError("element needs one matrix per target block")
        for xj, d, m in zip(x, self.fiber_dims, self.target.blocks):
            if xj.shape != (d, m):
                raise ValidationError(f"fiber matrix has shape {xj.shape}, expected {(d, m)}")
        return x

    def zero_element(self) -> Element:
        return tuple(
            np.zeros((d, m), dtype=complex)
            for d, m in zip(self.fiber_dims, self.target.blocks)
        )

    def basis(self) -> list[Element]:
        """Matrix-unit basis, ordered by fiber, then row, then column."""
        out = []
        for j, (d, m) in enumerate(zip(self.fiber_dims, self.target.blocks)):
            for u in range(d):
                for p in range(m):
                    elt = self.zero_element()
                    elt[j][u, p] = 1.0
                    out.append(elt)
        return out

    def inner_product(self, x, y) -> tuple[np.ndarray, ...]:
        """Target-valued pairing: the tuple of x_j^* y_j."""
        x, y = self.as_element(x), self.as_element(y)
        return tuple(xj.conj().T @ yj for xj, yj in zip(x, y))

    def right_mul(self, x, b: AlgebraElement) -> Element:
        x = self.as_element(x)
        return tuple(xj @ bj for xj, bj in zip(x, b))

    def element_norm(self, x) -> float:
        """Largest entry of the inner product, as a cheap vanishing gauge."""
        return max((_max_abs(ip) for ip in self.inner_product(x, x)), default=0.0)

    def random_element(self, rng: np.random.Generator) -> Element:
        return tuple(
            rng.standard_normal((d, m)) + 1j * rng.standard_normal((d, m))
            for d, m in zip(self.fiber_dims, self.target.blocks)
        )


@dataclass(frozen=True, eq=False)
class ConcreteCorr:
    """A concrete module plus a left action, stored as matrix-unit images.

    action[j][i] has shape (n_i, n_i, d_j, d_j): the image on fiber j of each
    matrix unit of source block i.
    """

    source: FdCStarAlgebra
    module: ConcreteModule
    action: tuple[tuple[np.ndarray, ...], ...]

    def __post_init__(self):
        acts = tuple(tuple(np.asarray(a, dtype=complex) for a in per) for per in self.action)
        if len(acts) != self.module.target.block_count:
            raise ValidationError("one action table per target block required")
        for j, per in enumerate(acts):
            if len(per) != self.source.block_count:
                raise ValidationError("one unit-image array per source block required")
            d = self.module.fiber_dims[j]
            for i, arr in enumerate(per):
                n = self.source.blocks[i]
                if arr.shape != (n, n, d, d):
                    raise ValidationError(
                        f"unit images for block {i} on fiber {j} have shape "
                        f"{arr.shape}, expected {(n, n, d, d)}"
                    )
                arr.setflags(write=False)
        object.__setattr__(self, "action", acts)

    @property
    def target(self) -> FdCStarAlgebra:
        return self.module.target

    def action_matrix(self, j: int, a: AlgebraElement) -> np.ndarray:
        """The operator on fiber j induced by an algebra element."""
        d = self.module.fiber_dims[j]
        out = np.zeros((d, d), dtype=complex)
        for ai, arr in zip(a, self.action[j]):
            out += np.einsum("pq,pqde->de", np.asarray(ai, dtype=complex), arr)
        return out

    def apply(self, a: AlgebraElement, x) -> Element:
        """Left action of an algebra element on a module element."""
        x = self.module.as_element(x)
        return tuple(self.action_matrix(j, a) @ xj for j, xj in enumerate(x))


def realize(kind: CorrClass) -> ConcreteCorr:
    """Canonical numeric model of a finite-multiplicity class.

    Fiber j stacks k_{ij} copies of each source block i in block order, so
    its dimension is sum_i k_{ij} n_i and the left action is the matching
    block-diagonal sum of identity representations.  classify inverts this.
    """
    if not kind.all_finite:
        raise ValidationError("cannot realize a class with infinite multiplicities")
    a, b = kind.source, kind.target
    k = [[int(v) for v in row] for row in kind.matrix]
    dims = tuple(
        sum(k[i][j] * n for i, n in enumerate(a.blocks)) for j in range(b.block_count)
    )
    action = []
    for j in range(b.block_count):
        d = dims[j]
        imgs = [np.zeros((n, n, d, d), dtype=complex) for n in a.blocks]
        off = 0
        for i, n in enumerate(a.blocks):
            for _ in range(k[i][j]):
                for p in range(n):
                    for q in range(n):
                        imgs[i][p, q, off + p, off + q] = 1.0
                off += n
        action.append(tuple(imgs))
    return ConcreteCorr(a, ConcreteModule(b, dims), tuple(action))


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    violation: float


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]
    tol: float

    @property
    def max_violation(self) -> float:
        return max((c.violation for c in self.checks), default=0.0)

    @property
    def ok(self) -> bool:
        return self.max_violation <= self.tol

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if c.violation > self.tol]

    def to_json(self) -> dict:
        return {
            "tol": self.tol,
            "ok": self.ok,
            "checks": [{"name": c.name, "violation": c.violation} for c in self.checks],
        }


def _adjoint_violation(x: ConcreteCorr) -> float:
    worst = 0.0
    for j in range(x.target.block_count):
        for i, n in enumerate(x.source.blocks):
            arr = x.action[j][i]
            for p in range(n):
                for q in range(n):
                    worst = max(worst, _max_abs(arr[p, q].conj().T - arr[q, p]))
    return worst


def _nondegeneracy_violation(x: ConcreteCorr) -> float:
    worst = 0.0
    for j, d in enumerate(x.module.fiber_dims):
        if d == 0:
            continue
        total = np.zeros((d, d), dtype=complex)
        for i, n in enumerate(x.source.blocks):
            for p in range(n):
                total += x.action[j][i][p, p]
        worst = max(worst, _max_abs(total - np.eye(d)))
    return worst


def _mult_violation_exhaustive(x: ConcreteCorr) -> float:
    worst = 0.0
    for j, d in enumerate(x.module.fiber_dims):
        units = []
        for i, n in enumerate(x.source.blocks):
            for p in range(n):
                for q in range(n):
                    units.append((i, p, q, x.action[j][i][p, q]))
        for i1, p1, q1, u in units:
            for i2, p2, q2, v in units:
                prod = u @ v
                if i1 == i2 and q1 == p2:
                    prod = prod - x.action[j][i1][p1, q2]
                worst = max(worst, _max_abs(prod))
    return worst


def _mult_violation_generic(x: ConcreteCorr, trials: int = 2) -> float:
    # Deterministic generic elements: a failure of multiplicativity anywhere
    # shows up against a generic pair with probability one.
    rng = np.random.default_rng(0x5EED)
    worst = 0.0
    for _ in range(trials):
        a = tuple(
            rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            for n in x.source.blocks
        )
        b = tuple(
            rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            for n in x.source.blocks
        )
        ab = tuple(ai @ bi for ai, bi in zip(a, b))
        for j in range(x.target.block_count):
            lhs = x.action_matrix(j, a) @ x.action_matrix(j, b)
            worst = max(worst, _max_abs(lhs - x.action_matrix(j, ab)))
    return worst


def validate(x: ConcreteCorr, tol: float = VALIDATE_TOL) -> ValidationReport:
    """Measure every action axiom: star-homomorphism identities on all matrix
    units (multiplication and adjoints) and nondegeneracy (unit images summing
    to the identity on each nonzero fiber).

    Exhaustive over unit pairs, so quadratic in the algebra dimension; meant
    for desk-scale modules.  A zero module passes vacuously.
    """
    checks = (
        AxiomCheck("star-multiplicativity", _mult_violation_exhaustive(x)),
        AxiomCheck("star-adjoint", _adjoint_violation(x)),
        AxiomCheck("nondegeneracy", _nondegeneracy_violation(x)),
    )
    return ValidationReport(checks, tol)


def _quick_validate(x: ConcreteCorr, tol: float) -> ValidationReport:
    # classify-path validation: adjoints and nondegeneracy exhaustively,
    # multiplicativity against fixed generic elements (cubic, not quartic).
    checks = (
        AxiomCheck("star-multiplicativity", _mult_violation_generic(x)),
        AxiomCheck("star-adjoint", _adjoint_violation(x)),
        AxiomCheck("nondegeneracy", _nondegeneracy_violation(x)),
    )
    return ValidationReport(checks, tol)


def classify(
    x: ConcreteCorr,
    tol: float = CLASSIFY_TOL,
    validate_tol: float = VALIDATE_TOL,
) -> CorrClass:
    """Extract the multiplicity matrix of a validated concrete correspondence.

    k_{ij} is the rank of the image on fiber j of a minimal projection of
    source block i; since that image is a projection, the rank is its trace,
    rounded within `tol`.
    """
    report = _quick_validate(x, validate_tol)
    if not report.ok:
        raise ValidationError(
            f"action fails validation: {report.failures()} "
            f"(max violation {report.max_violation:.3e})"
        )
    rows = []
    for i in range(x.source.block_count):
        row = []
        for j in range(x.target.block_count):
            t = complex(np.trace(x.action[j][i][0, 0]))
            k = round(t.real)
            if abs(t.imag) > tol or abs(t.real - k) > tol or k < 0:
                raise ValidationError(
                    f"projection trace {t} on fiber {j} is not a multiplicity"
                )
            row.append(int(k))
        rows.append(tuple(row))
    return CorrClass(x.source, x.target, tuple(rows))


class InteriorTensor:
    """Balanced tensor product of composable concrete correspondences.

    The algebraic tensor product of the two matrix-unit bases carries the
    C-valued form <x (x) y, u (x) v> = <y, <x, u> v>.  Composing with the
    canonical trace on the target algebra gives a scalar Gram matrix which,
    because the left factor's inner product is canonical, splits exactly as

        identity (x) R (x) identity

    per (left fiber j, right fiber l) pair, where R collects the action of
    the matrix units of middle block j on fiber l of the right factor.
    Eigenvectors of R above the null cutoff give representatives of the
    Hausdorff quotient that are orthonormal for the block-valued form, i.e.
    the quotient lands directly in canonical fiber form.  The left action
    passes through on the surviving coordinates.
    """

    def __init__(self, x: ConcreteCorr, y: ConcreteCorr, null_tol: float = GRAM_NULL_TOL):
        if x.target != y.source:
            raise ValidationError(
                f"cannot tensor: first ends at {x.target!r}, second starts at {y.source!r}"
            )
        self._x, self._y = x, y
        a, b, c = x.source, x.target, y.target
        dx, ey = x.module.fiber_dims, y.module.fiber_dims

        eigen: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}
        gram_max = 0.0
        for l in range(c.block_count):
            for j in range(b.block_count):
                if ey[l] == 0 or dx[j] == 0:
                    continue
                m = b.blocks[j]
                r = np.transpose(y.action[l][j], (0, 2, 1, 3)).reshape(
                    m * ey[l], m * ey[l]
                )
                r = (r + r.conj().T) / 2.0
                lam, vec = np.linalg.eigh(r)
                eigen[(l, j)] = (lam, vec)
                if lam.size:
                    gram_max = max(gram_max, float(lam[-1]))
        cut = null_tol * max(1.0, gram_max)
        for lam, _ in eigen.values():
            if lam.size and float(lam[0]) < -cut:
                raise ValidationError("tensor Gram form is not positive semidefinite")

        self.gram_norm = gram_max
        self.gram_blocks = tuple(
            ((l, j), lam.copy()) for (l, j), (lam, _) in sorted(eigen.items())
        )

        layout: list[tuple[tuple[int, int, np.ndarray], ...]] = []
        fibers: list[int] = []
        actions: list[tuple[np.ndarray, ...]] = []
        for l in range(c.block_count):
            parts = []
            f = 0
            for j in range(b.block_count):
                if (l, j) not in eigen:
                    continue
                lam, vec = eigen[(l, j)]
                keep = lam > cut
                mu = int(np.count_nonzero(keep))
                if mu == 0:
                    continue
                w = vec[:, keep] * np.sqrt(lam[keep])
                parts.append((j, mu, w))
                f += dx[j] * mu
            fibers.append(f)
            per_source = []
            for i, n in enumerate(a.blocks):
                arr = np.zeros((n, n, f, f), dtype=complex)
                off = 0
                for j, mu, _w in parts:
                    span = dx[j] * mu
                    blk = np.einsum(
                        "pqde,ab->pqdaeb", x.action[j][i], np.eye(mu)
                    ).reshape(n, n, span, span)
                    arr[:, :, off : off + span, off : off + span] = blk
                    off += span
                per_source.append(arr)
            actions.append(tuple(per_source))
            layout.append(tuple(parts))
        self._layout = tuple(layout)
        self.corr = ConcreteCorr(a, ConcreteModule(c, tuple(fibers)), tuple(actions))

    def embed(self, x_elt, y_elt) -> Element:
        """Image of the elementary tensor x (x) y in the quotient module.

        The balancing relation holds here: embed(x b, y) and embed(x, b y)
        agree up to the Gram cutoff.
        """
        x_elt = self._x.module.as_element(x_elt)
        y_elt = self._y.module.as_element(y_elt)
        b, c = self._x.target, self._y.target
        out = []
        for l, parts in enumerate(self._layout):
            cl = c.blocks[l]
            rows = [np.zeros((0, cl), dtype=complex)]
            for j, mu, w in parts:
                d = self._x.module.fiber_dims[j]
                m = b.blocks[j]
                e = self._y.module.fiber_dims[l]
                t = np.einsum("up,vq->upvq", x_elt[j], y_elt[l]).reshape(d, m * e, cl)
                rows.append(np.einsum("ka,ukq->uaq", w.conj(), t).reshape(d * mu, cl))
            out.append(np.vstack(rows))
        return tuple(out)


def interior_tensor(
    x: ConcreteCorr, y: ConcreteCorr, null_tol: float = GRAM_NULL_TOL
) -> ConcreteCorr:
    """The balanced tensor product as a concrete correspondence."""
    return InteriorTensor(x, y, null_tol).corr


def interior_tensor_norm(x: ConcreteCorr, y: ConcreteCorr) -> float:
    """Largest eigenvalue of the scalarized Gram form of the tensor product.

    Vanishes (below any sensible cutoff) exactly when the tensor product is
    the zero module.
    """
    return InteriorTensor(x, y).gram_norm


def is_isomorphic(x: ConcreteCorr, y: ConcreteCorr, tol: float = CLASSIFY_TOL) -> bool:
    """Isomorphism of concrete correspondences: equal multiplicity matrices."""
    if x.source != y.source or x.target != y.target:
        raise ValidationError("isomorphism comparison requires equal endpoints")
    return classify(x, tol) == classify(y, tol)


def dual_concrete(x: ConcreteCorr, tol: float = CLASSIFY_TOL) -> ConcreteCorr:
    """The dual of a concrete Hilbert bimodule.

    The dual swaps the module structures (b x~ a = (a* x b*)~), which on
    multiplicity matrices is transposition; this returns the canonical model
    of the transposed class, the dual up to isomorphism.  Tensoring with x
    on either side recovers the support ideals as diagonal classes.
    """
    kind = classify(x, tol)
    if not is_hilbert_bimodule(kind):
        raise ValidationError("dual requires a Hilbert bimodule (partial permutation class)")
    return realize(dual_class(kind))


def rank_one(x, y) -> tuple[np.ndarray, ...]:
    """The rank-one operator theta_{x,y} : z -> x <y, z>, as the tuple x_j y_j^*.

    Over a basis these span every fiber matrix algebra, i.e. all compacts.
    """
    x = tuple(np.asarray(xj, dtype=complex) for xj in x)
    y = tuple(np.asarray(yj, dtype=complex) for yj in y)
    if len(x) != len(y) or any(xj.shape != yj.shape for xj, yj in zip(x, y)):
        raise ValidationError("rank_one requires elements of the same module")
    return tuple(xj @ yj.conj().T for xj, yj in zip(x, y))


def compacts_span_defect(x: ConcreteCorr) -> float:
    """How far the compacts sit from the range of the left action.

    Least-squares residual, over all basis pairs (u, v), of expressing
    theta_{u,v} as the image of an algebra element.  Zero (within tolerance)
    exactly when the class is a Hilbert bimodule; the solved coefficients
    then define the left inner product via <x, y>_left = phi^{-1}(theta_{x,y}).
    """
    dims = x.module.fiber_dims
    width = sum(d * d for d in dims)
    if width == 0:
        return 0.0
    cols = []
    for i, n in enumerate(x.source.blocks):
        for p in range(n):
            for q in range(n):
                cols.append(
                    np.concatenate([x.action[j][i][p, q].ravel() for j in range(len(dims))])
                )
    phi = np.stack(cols, axis=1) if cols else np.zeros((width, 0), dtype=complex)
    basis = x.module.basis()
    targets = np.stack(
        [
            np.concatenate([t.ravel() for t in rank_one(u, v)])
            for u in basis
            for v in basis
        ],
        axis=1,
    )
    if phi.shape[1] == 0:
        return _max_abs(targets)
    sol, *_ = np.linalg.lstsq(phi, targets, rcond=None)
    return _max_abs(phi @ sol - targets)
