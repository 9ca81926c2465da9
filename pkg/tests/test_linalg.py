import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opgraph.linalg import (
    DEFAULT_TOL,
    Tolerance,
    dagger,
    gram_rank,
    hs_inner,
    is_unitary,
    kron,
    max_abs,
    orthonormalize,
)
from opgraph.weyl import weyl_dense, label

from conftest import random_complex

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, 1j], [-1j, 0]], dtype=complex)


def test_tolerance_defaults_and_validation():
    assert DEFAULT_TOL.absolute == 1e-12
    assert DEFAULT_TOL.relative == 1e-9
    with pytest.raises(ValueError):
        Tolerance(absolute=0.0)
    with pytest.raises(ValueError):
        Tolerance(relative=-1e-9)


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_uniform_vectors():
    v = np.array([1, 1]) / np.sqrt(2)
    out = kron(v, v)
    assert np.allclose(out, np.full(4, 0.5), atol=1e-15)


def test_kron_block_permutation():
    e1, e2 = np.eye(2)
    assert np.allclose(kron(SX, np.eye(2)) @ kron(e1, e1), kron(e2, e1), atol=1e-15)


def test_kron_associative(rng):
    a = random_complex(rng, 2, 2)
    b = random_complex(rng, 3, 3)
    c = random_complex(rng, 2, 2)
    assert max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-12


def test_hs_inner_identity():
    for n in (2, 3, 7):
        assert hs_inner(np.eye(n), np.eye(n)) == pytest.approx(n)


def test_hs_inner_pauli_pair():
    assert abs(hs_inner(SX, SY)) < 1e-15


def test_hs_inner_clock_shift_orthogonal():
    x = weyl_dense(label(3, 1, 0))
    z = weyl_dense(label(3, 0, 1))
    assert abs(hs_inner(x, z)) < 1e-14


def test_hs_inner_shape_mismatch():
    with pytest.raises(ValueError):
        hs_inner(np.eye(2), np.eye(3))
    with pytest.raises(ValueError):
        hs_inner(np.ones((2, 3)), np.ones((2, 3)))


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 5))
def test_hs_inner_conjugate_symmetric_and_positive(seed, n):
    rng = np.random.default_rng(seed)
    a = random_complex(rng, n, n)
    b = random_complex(rng, n, n)
    assert hs_inner(a, b) == pytest.approx(np.conj(hs_inner(b, a)))
    self_product = hs_inner(a, a)
    assert abs(self_product.imag) < 1e-12
    assert self_product.real >= 0


def test_hs_inner_linear_first_argument(rng):
    a = random_complex(rng, 3, 3)
    b = random_complex(rng, 3, 3)
    c = random_complex(rng, 3, 3)
    lhs = hs_inner(2.0 * a + 1j * b, c)
    rhs = 2.0 * hs_inner(a, c) + 1j * hs_inner(b, c)
    assert lhs == pytest.approx(rhs)


def test_gram_rank_single_and_multiples(rng):
    assert gram_rank([np.eye(4)]) == 1
    a = random_complex(rng, 3, 3)
    assert gram_rank([a, 2 * a, 1j * a]) == 1


def test_gram_rank_clock_powers():
    x = weyl_dense(label(3, 1, 0))
    assert gram_rank([np.eye(3), x, x @ x]) == 3


def test_gram_rank_empty_and_mismatch():
    assert gram_rank([]) == 0
    with pytest.raises(ValueError):
        gram_rank([np.eye(2), np.eye(3)])


def test_gram_rank_permutation_and_scaling_invariant(rng):
    ops = [random_complex(rng, 3, 3) for _ in range(5)]
    base = gram_rank(ops)
    for _ in range(10):
        perm = rng.permutation(len(ops))
        scales = random_complex(rng, len(ops))
        scales += np.sign(scales.real + 1e-3)  # keep away from zero
        scaled = [scales[i] * ops[p] for i, p in enumerate(perm)]
        assert gram_rank(scaled) == base


def test_gram_rank_bounded_by_count_and_dimension(rng):
    for count, n in ((3, 2), (6, 2), (10, 3)):
        ops = [random_complex(rng, n, n) for _ in range(count)]
        assert gram_rank(ops) <= min(count, n * n)


def test_gram_rank_zero_family():
    assert gram_rank([np.zeros((2, 2))]) == 0


def test_orthonormalize_two_product_vectors():
    f_plus = kron(np.array([1, 0]), np.array([1, 1]))
    f_minus = kron(np.array([0, 1]), np.array([1, -1]))
    assert np.linalg.norm(f_plus) == pytest.approx(np.sqrt(2))
    out = orthonormalize([f_plus, f_minus])
    assert len(out) == 2
    assert np.linalg.norm(out[0]) == pytest.approx(1.0)
    assert abs(np.vdot(out[0], out[1])) < 1e-14


def test_orthonormalize_duplicate_and_zero(rng):
    v = random_complex(rng, 4)
    assert len(orthonormalize([v, v])) == 1
    assert orthonormalize([np.zeros(4)]) == []


def test_orthonormalize_columns_are_isometry(rng):
    vectors = [random_complex(rng, 6) for _ in range(4)]
    basis = np.column_stack(orthonormalize(vectors))
    assert max_abs(dagger(basis) @ basis - np.eye(basis.shape[1])) < DEFAULT_TOL.absolute


def test_orthonormalize_preserves_span(rng):
    vectors = [random_complex(rng, 5) for _ in range(3)]
    basis = np.column_stack(orthonormalize(vectors))
    # every input vector must be reproduced by its projection onto the basis
    for v in vectors:
        assert np.linalg.norm(basis @ (dagger(basis) @ v) - v) < 1e-10


def test_is_unitary():
    assert is_unitary(np.eye(3))
    assert is_unitary(weyl_dense(label(5, 2, 3, 1)))
    assert not is_unitary(2 * np.eye(3))
    assert not is_unitary(np.ones((2, 3)))
