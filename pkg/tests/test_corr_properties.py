"""Law-level properties of the symbolic calculus, on seeded and exhaustive inputs."""

import itertools

import numpy as np

from enchilada import (
    CorrClass,
    cokernel,
    compose,
    direct_sum,
    dual,
    enumerate_algebras,
    enumerate_corrs,
    ideal_inclusion_corr,
    identity_corr,
    is_hilbert_bimodule,
    is_invertible,
    is_split_epi,
    is_split_mono,
    kernel,
    left_kernel,
    random_algebra,
    random_corr,
    restrict_right,
    right_support,
    schubert_coimage,
    schubert_image,
    suite_compose_laws,
    suite_schubert_identities,
    suite_universal_properties,
    tensor_is_zero,
    zero_corr,
)


def test_compose_laws_suite():
    result = suite_compose_laws(np.random.default_rng(11), cases=120)
    assert result.ok, result.failures


def test_universal_properties_suite():
    result = suite_universal_properties(np.random.default_rng(12), cases=40)
    assert result.ok, result.failures


def test_schubert_identities_suite():
    result = suite_schubert_identities(np.random.default_rng(13), cases=60)
    assert result.ok, result.failures


def test_direct_sum_laws():
    rng = np.random.default_rng(14)
    for _ in range(60):
        a, b = random_algebra(rng), random_algebra(rng)
        x = random_corr(rng, a, b, inf_prob=0.2)
        y = random_corr(rng, a, b, inf_prob=0.2)
        z = random_corr(rng, a, b, inf_prob=0.2)
        assert direct_sum(x, y) == direct_sum(y, x)
        assert direct_sum(direct_sum(x, y), z) == direct_sum(x, direct_sum(y, z))
        assert direct_sum(x, zero_corr(a, b)) == x


def test_zero_tensor_iff_zero_composite_exhaustive():
    algebras = enumerate_algebras(max_blocks=2, max_size=2)
    for a, b, c in itertools.product(algebras, repeat=3):
        for x in enumerate_corrs(a, b, 1):
            for y in enumerate_corrs(b, c, 1):
                assert tensor_is_zero(x, y) == compose(x, y).is_zero


def test_restriction_to_support_preserves_composites():
    # X (x)_B Y and X (x)_{B_X} Y give the same class
    rng = np.random.default_rng(15)
    for _ in range(100):
        a, b, c = (random_algebra(rng) for _ in range(3))
        x = random_corr(rng, a, b, inf_prob=0.1)
        y = random_corr(rng, b, c, inf_prob=0.1)
        support = right_support(x)
        restricted = restrict_right(x, support)
        bridged = compose(ideal_inclusion_corr(support), y)
        assert compose(restricted, bridged) == compose(x, y)


def test_nonzero_left_kernel_gives_distinguishing_pair():
    rng = np.random.default_rng(16)
    found = 0
    for _ in range(120):
        a, b = random_algebra(rng), random_algebra(rng)
        x = random_corr(rng, a, b, inf_prob=0.1, zero_prob=0.5)
        ker = left_kernel(x)
        if ker.is_zero:
            continue
        found += 1
        w = ideal_inclusion_corr(ker)
        assert not w.is_zero
        assert compose(w, x).is_zero
        assert compose(w, x) == compose(zero_corr(w.source, a), x)
        assert w != zero_corr(w.source, a)
    assert found > 10


def test_invertible_iff_split_both_iff_permutation():
    algebras = enumerate_algebras(max_blocks=2, max_size=2)
    for a, b in itertools.product(algebras, repeat=2):
        for x in enumerate_corrs(a, b, 2):
            split_both = is_split_mono(x) and is_split_epi(x)
            assert is_invertible(x) == split_both
            r, s = x.shape
            perm = (
                all(sum(1 for v in row if v == 1) == 1 for row in x.matrix)
                and all(
                    sum(1 for i in range(r) if x.matrix[i][j] == 1) == 1
                    for j in range(s)
                )
                and all(v == 0 or v == 1 for row in x.matrix for v in row)
            )
            assert is_invertible(x) == perm


def _row_has_private_unit_column(x, i):
    r = x.source.block_count
    return any(
        x.matrix[i][j] == 1
        and all(not x.matrix[i2][j] for i2 in range(r) if i2 != i)
        for j in range(x.target.block_count)
    )


def test_one_sided_inverses_bounded_search():
    # Constructive direction: a left-full partial permutation is undone by its
    # dual.  The converse fails: a one-sided inverse M with X * M = 1 exists
    # exactly when every row of X holds a 1 that is alone in its column, a
    # strictly wider class than the partial permutations.  Witness:
    # [[1, 1]] * [[1], [0]] = [[1]].  (See the decisions ledger.)
    algebras = enumerate_algebras(max_blocks=2, max_size=2)
    for a, b in itertools.product(algebras, repeat=2):
        ia = identity_corr(a)
        for x in enumerate_corrs(a, b, 2):
            if is_split_mono(x):
                assert compose(x, dual(x)) == ia
            found = any(compose(x, m) == ia for m in enumerate_corrs(b, a, 3))
            private = all(
                _row_has_private_unit_column(x, i) for i in range(a.block_count)
            )
            assert found == private, x
            if is_split_mono(x):
                assert found


def test_diagonal_embedding_is_one_sided_invertible_but_not_hilbert_bimodule():
    from enchilada import is_hilbert_bimodule, make_algebra

    c1 = make_algebra([1])
    c2 = make_algebra([1, 1])
    x = CorrClass(c1, c2, ((1, 1),))
    m = CorrClass(c2, c1, ((1,), (0,)))
    assert compose(x, m) == identity_corr(c1)
    assert not is_hilbert_bimodule(x)
    assert not is_split_mono(x)


def test_kernel_of_random_class_is_split_mono():
    rng = np.random.default_rng(17)
    for _ in range(80):
        a, b = random_algebra(rng), random_algebra(rng)
        x = random_corr(rng, a, b, inf_prob=0.2)
        k = kernel(x)
        assert is_split_mono(k)
        assert compose(k, x).is_zero


def test_left_full_hilbert_bimodules_are_exactly_kernels():
    # forward: a left-full partial permutation is a kernel of the quotient
    # by its support; backward: kernels are left-full partial permutations
    algebras = enumerate_algebras(max_blocks=2, max_size=2)
    for a, b in itertools.product(algebras, repeat=2):
        for x in enumerate_corrs(a, b, 1):
            if is_split_mono(x):
                witness = cokernel(schubert_image(x))
                assert compose(x, witness).is_zero
                assert left_kernel(witness).members == right_support(x).members
            k = kernel(x)
            assert is_split_mono(k)


def test_schubert_factorizations():
    rng = np.random.default_rng(18)
    for _ in range(80):
        a, b = random_algebra(rng), random_algebra(rng)
        x = random_corr(rng, a, b, inf_prob=0.15)
        assert schubert_image(x) == kernel(cokernel(x))
        assert schubert_coimage(x) == cokernel(kernel(x))
        # the class factors through both
        through_image = restrict_right(x, right_support(x))
        assert compose(through_image, schubert_image(x)) == x
        from enchilada import factor_through_quotient

        through_coimage = factor_through_quotient(x, left_kernel(x))
        assert compose(schubert_coimage(x), through_coimage) == x
