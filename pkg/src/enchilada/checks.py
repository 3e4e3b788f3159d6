"""Seeded generators, exhaustive enumerations, and reusable invariant suites.

Everything here is deterministic for a fixed seed: generators take a numpy
Generator, suites derive per-suite child seeds from one SeedSequence, so a
rerun reproduces the transcript byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .algebras import FdCStarAlgebra
from .cardinal import INF, Cardinal
from .corr import (
    CorrClass,
    cokernel,
    compose,
    identity_corr,
    kernel,
    left_kernel,
    right_support,
    schubert_coimage,
    schubert_image,
    tensor_is_zero,
)
from .errors import ValidationError
from .exactness import check_short_exact, exact_at

__all__ = [
    "random_algebra",
    "random_corr",
    "enumerate_algebras",
    "enumerate_corrs",
    "SuiteResult",
    "RandomCheckReport",
    "suite_compose_laws",
    "suite_universal_properties",
    "suite_schubert_identities",
    "suite_tensor_oracle",
    "suite_zero_tensor",
    "suite_short_exact_theorem",
    "run_random_checks",
    "DEFAULT_COUNTS",
    "DEFAULT_BOUNDS",
]


def random_algebra(
    rng: np.random.Generator,
    max_blocks: int = 3,
    max_size: int = 3,
    zero_prob: float = 0.08,
) -> FdCStarAlgebra:
    """A random block algebra; occasionally the zero algebra."""
    if rng.random() < zero_prob:
        return FdCStarAlgebra(())
    r = int(rng.integers(1, max_blocks + 1))
    return FdCStarAlgebra(tuple(int(rng.integers(1, max_size + 1)) for _ in range(r)))


def random_corr(
    rng: np.random.Generator,
    source: FdCStarAlgebra,
    target: FdCStarAlgebra,
    max_entry: int = 2,
    inf_prob: float = 0.0,
    zero_prob: float = 0.35,
) -> CorrClass:
    """A random class with the given endpoints."""
    rows = []
    for _ in range(source.block_count):
        row: list[Cardinal | int] = []
        for _ in range(target.block_count):
            u = rng.random()
            if u < zero_prob:
                row.append(0)
            elif u < zero_prob + inf_prob:
                row.append(INF)
            else:
                row.append(int(rng.integers(1, max_entry + 1)))
        rows.append(tuple(row))
    return CorrClass(source, target, tuple(rows))


def enumerate_algebras(
    max_blocks: int = 2, max_size: int = 2, include_zero: bool = True
) -> tuple[FdCStarAlgebra, ...]:
    """All algebras with at most `max_blocks` blocks of size at most `max_size`."""
    out = [FdCStarAlgebra(())] if include_zero else []
    for r in range(1, max_blocks + 1):
        for combo in itertools.product(range(1, max_size + 1), repeat=r):
            out.append(FdCStarAlgebra(combo))
    return tuple(out)


def enumerate_corrs(
    source: FdCStarAlgebra, target: FdCStarAlgebra, max_entry: int = 1
) -> Iterator[CorrClass]:
    """All classes between two algebras with entries bounded by `max_entry`."""
    s = target.block_count
    cells = source.block_count * s
    for combo in itertools.product(range(max_entry + 1), repeat=cells):
        rows = tuple(combo[i * s : (i + 1) * s] for i in range(source.block_count))
        yield CorrClass(source, target, rows)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "ok": self.ok,
            "failures": list(self.failures),
        }


def suite_compose_laws(
    rng: np.random.Generator,
    cases: int = 500,
    max_blocks: int = 3,
    max_size: int = 3,
    max_entry: int = 2,
    inf_prob: float = 0.15,
) -> SuiteResult:
    """Associativity and both unit laws of composition, infinite entries included."""
    fails = []
    for n in range(cases):
        a, b, c, d = (random_algebra(rng, max_blocks, max_size) for _ in range(4))
        x = random_corr(rng, a, b, max_entry, inf_prob)
        y = random_corr(rng, b, c, max_entry, inf_prob)
        z = random_corr(rng, c, d, max_entry, inf_prob)
        if compose(compose(x, y), z) != compose(x, compose(y, z)):
            fails.append(f"case {n}: associativity {x!r} {y!r} {z!r}")
        if compose(identity_corr(a), x) != x or compose(x, identity_corr(b)) != x:
            fails.append(f"case {n}: unit law {x!r}")
    return SuiteResult("compose laws", cases, tuple(fails))


def _bump(entry: Cardinal) -> Cardinal | int:
    # A guaranteed-different entry, for uniqueness probes.
    return 0 if not entry.is_finite else entry + 1


def suite_universal_properties(
    rng: np.random.Generator,
    cases: int = 100,
    max_blocks: int = 3,
    max_size: int = 3,
    max_entry: int = 2,
    inf_prob: float = 0.1,
) -> SuiteResult:
    """Kernel and cokernel factorizations: existence, formula, and uniqueness.

    For W with W * X = 0 the unique mediator is W restricted to the kernel
    columns; dually for X * W = 0 it is W restricted to the non-support rows.
    """
    fails = []
    for n in range(cases):
        a = random_algebra(rng, max_blocks, max_size)
        b = random_algebra(rng, max_blocks, max_size)
        d = random_algebra(rng, max_blocks, max_size)
        x = random_corr(rng, a, b, max_entry, inf_prob)

        ker = kernel(x)
        members = left_kernel(x).sorted_members
        w_rows = []
        for _ in range(d.block_count):
            row = [0] * a.block_count
            for i in members:
                u = rng.random()
                if u < 0.5:
                    row[i] = int(rng.integers(0, max_entry + 1))
                elif u < 0.5 + inf_prob:
                    row[i] = INF
            w_rows.append(tuple(row))
        w = CorrClass(d, a, tuple(w_rows))
        if not compose(w, x).is_zero:
            fails.append(f"case {n}: generated W does not annihilate X")
            continue
        mediator = CorrClass(d, ker.source, tuple(tuple(row[i] for i in members) for row in w.matrix))
        if compose(mediator, ker) != w:
            fails.append(f"case {n}: kernel factorization failed for {x!r}")
        if mediator.shape[0] and mediator.shape[1]:
            i0 = int(rng.integers(0, mediator.shape[0]))
            j0 = int(rng.integers(0, mediator.shape[1]))
            bumped = [list(row) for row in mediator.matrix]
            bumped[i0][j0] = _bump(bumped[i0][j0])
            other = CorrClass(d, ker.source, tuple(tuple(r) for r in bumped))
            if compose(other, ker) == w:
                fails.append(f"case {n}: kernel mediator not unique for {x!r}")

        cok = cokernel(x)
        support = right_support(x).sorted_members
        rest = [j for j in range(b.block_count) if j not in support]
        w2_rows = []
        for j in range(b.block_count):
            row = [0] * d.block_count
            if j in rest:
                for t in range(d.block_count):
                    u = rng.random()
                    if u < 0.5:
                        row[t] = int(rng.integers(0, max_entry + 1))
                    elif u < 0.5 + inf_prob:
                        row[t] = INF
            w2_rows.append(tuple(row))
        w2 = CorrClass(b, d, tuple(w2_rows))
        if not compose(x, w2).is_zero:
            fails.append(f"case {n}: generated W' is not annihilated by X")
            continue
        mediator2 = CorrClass(
            cok.target, d, tuple(w2.matrix[j] for j in rest)
        )
        if compose(cok, mediator2) != w2:
            fails.append(f"case {n}: cokernel factorization failed for {x!r}")
        if mediator2.shape[0] and mediator2.shape[1]:
            i0 = int(rng.integers(0, mediator2.shape[0]))
            j0 = int(rng.integers(0, mediator2.shape[1]))
            bumped = [list(row) for row in mediator2.matrix]
            bumped[i0][j0] = _bump(bumped[i0][j0])
            other = CorrClass(cok.target, d, tuple(tuple(r) for r in bumped))
            if compose(cok, other) == w2:
                fails.append(f"case {n}: cokernel mediator not unique for {x!r}")
    return SuiteResult("universal properties", cases, tuple(fails))


def suite_schubert_identities(
    rng: np.random.Generator,
    cases: int = 200,
    max_blocks: int = 3,
    max_size: int = 3,
    max_entry: int = 2,
    inf_prob: float = 0.15,
) -> SuiteResult:
    """Image = kernel of cokernel, coimage = cokernel of kernel, and the two
    always-exact node identities."""
    fails = []
    for n in range(cases):
        a = random_algebra(rng, max_blocks, max_size)
        b = random_algebra(rng, max_blocks, max_size)
        x = random_corr(rng, a, b, max_entry, inf_prob)
        if schubert_image(x) != kernel(cokernel(x)):
            fails.append(f"case {n}: image identity failed for {x!r}")
        if schubert_coimage(x) != cokernel(kernel(x)):
            fails.append(f"case {n}: coimage identity failed for {x!r}")
        if not exact_at(kernel(x), x).exact:
            fails.append(f"case {n}: kernel node not exact for {x!r}")
        if not exact_at(x, cokernel(x)).exact:
            fails.append(f"case {n}: cokernel node not exact for {x!r}")
    return SuiteResult("schubert identities", cases, tuple(fails))


def suite_tensor_oracle(
    rng: np.random.Generator,
    cases: int = 200,
    max_blocks: int = 3,
    max_size: int = 3,
    max_entry: int = 2,
    tol: float = 1e-6,
) -> SuiteResult:
    """Numeric cross-check: classify(realize(K) (x) realize(L)) = K * L,
    plus the realize/classify roundtrip."""
    from .concrete import classify, interior_tensor, realize

    fails = []
    for n in range(cases):
        a = random_algebra(rng, max_blocks, max_size)
        b = random_algebra(rng, max_blocks, max_size)
        c = random_algebra(rng, max_blocks, max_size)
        k = random_corr(rng, a, b, max_entry)
        l = random_corr(rng, b, c, max_entry)
        if classify(realize(k), tol) != k:
            fails.append(f"case {n}: roundtrip failed for {k!r}")
        got = classify(interior_tensor(realize(k), realize(l)), tol)
        if got != compose(k, l):
            fails.append(f"case {n}: oracle mismatch {k!r} * {l!r} -> {got!r}")
    return SuiteResult("tensor oracle", cases, tuple(fails))


def suite_zero_tensor(
    rng: np.random.Generator,
    cases: int = 100,
    max_blocks: int = 3,
    max_size: int = 3,
    max_entry: int = 2,
    norm_tol: float = 1e-9,
) -> SuiteResult:
    """Three-way agreement on vanishing: support criterion, zero composite
    matrix, and numerically vanishing tensor product.

    Half the pairs are built with the support inside the kernel so both
    verdicts appear.
    """
    from .concrete import interior_tensor_norm, realize

    fails = []
    for n in range(cases):
        a = random_algebra(rng, max_blocks, max_size)
        b = random_algebra(rng, max_blocks, max_size)
        c = random_algebra(rng, max_blocks, max_size)
        y = random_corr(rng, b, c, max_entry)
        if n % 2 == 0:
            allowed = left_kernel(y).members
            rows = []
            for _ in range(a.block_count):
                row = [
                    int(rng.integers(0, max_entry + 1)) if j in allowed else 0
                    for j in range(b.block_count)
                ]
                rows.append(tuple(row))
            x = CorrClass(a, b, tuple(rows))
        else:
            x = random_corr(rng, a, b, max_entry)
        symbolic = tensor_is_zero(x, y)
        matrix_zero = compose(x, y).is_zero
        numeric = interior_tensor_norm(realize(x), realize(y)) < norm_tol
        if not (symbolic == matrix_zero == numeric):
            fails.append(
                f"case {n}: disagreement ({symbolic}, {matrix_zero}, {numeric}) "
                f"for {x!r} and {y!r}"
            )
    return SuiteResult("zero tensor", cases, tuple(fails))


def suite_short_exact_theorem(
    max_blocks: int = 2, max_size: int = 2, max_entry: int = 1
) -> SuiteResult:
    """Exhaustive agreement between the three-condition verdict and the
    node-by-node definition verdict for short sequences."""
    fails = []
    cases = 0
    algebras = enumerate_algebras(max_blocks, max_size)
    for a, b, c in itertools.product(algebras, repeat=3):
        for x in enumerate_corrs(a, b, max_entry):
            for y in enumerate_corrs(b, c, max_entry):
                cases += 1
                report = check_short_exact(x, y)
                if report.conditions_hold != report.nodes_exact:
                    fails.append(f"disagreement for {x!r} and {y!r}")
    return SuiteResult("short exact theorem", cases, tuple(fails))


DEFAULT_COUNTS = {
    "laws": 500,
    "universal": 100,
    "schubert": 200,
    "oracle": 200,
    "zero_tensor": 100,
}

DEFAULT_BOUNDS = {"max_blocks": 3, "max_size": 3, "max_entry": 2}


@dataclass(frozen=True)
class RandomCheckReport:
    seed: int
    results: tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "ok": self.ok,
            "suites": [r.to_json() for r in self.results],
        }


def run_random_checks(
    seed: int = 0,
    counts: dict | None = None,
    bounds: dict | None = None,
    tol: float = 1e-6,
) -> RandomCheckReport:
    """Run every invariant suite with child seeds derived from `seed`."""
    cfg = dict(DEFAULT_COUNTS)
    if counts:
        unknown = set(counts) - set(cfg)
        if unknown:
            raise ValidationError(f"unknown suite counts: {sorted(unknown)}")
        cfg.update(counts)
    bnd = dict(DEFAULT_BOUNDS)
    if bounds:
        unknown = set(bounds) - set(bnd)
        if unknown:
            raise ValidationError(f"unknown bounds: {sorted(unknown)}")
        bnd.update(bounds)
    for key, value in {**cfg, **bnd}.items():
        if not isinstance(value, int) or value < 1:
            raise ValidationError(f"{key} must be a positive integer, got {value!r}")
    children = np.random.SeedSequence(seed).spawn(5)
    rngs = [np.random.default_rng(s) for s in children]
    mb, ms, me = bnd["max_blocks"], bnd["max_size"], bnd["max_entry"]
    results = (
        suite_compose_laws(rngs[0], cfg["laws"], mb, ms, me),
        suite_universal_properties(rngs[1], cfg["universal"], mb, ms, me),
        suite_schubert_identities(rngs[2], cfg["schubert"], mb, ms, me),
        suite_tensor_oracle(rngs[3], cfg["oracle"], mb, ms, me, tol),
        suite_zero_tensor(rngs[4], cfg["zero_tensor"], mb, ms, me),
        suite_short_exact_theorem(),
    )
    return RandomCheckReport(seed, results)
