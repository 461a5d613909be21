import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from greedydct.catalog import T1
from greedydct.errors import DegenerateMatrixError, DomainError
from greedydct.linalg import (
    angle_between,
    exact_dct_matrix,
    has_orthonormal_rows,
    kronecker,
    orthogonalize,
    printed_dct_matrix,
    spd_inverse_sqrt,
)


def dct_oracle(n):
    # textbook DCT-II, one entry at a time
    m = np.empty((n, n))
    for k in range(n):
        a = np.sqrt(1 / n) if k == 0 else np.sqrt(2 / n)
        for j in range(n):
            m[k, j] = a * np.cos(np.pi * k * (2 * j + 1) / (2 * n))
    return m


@pytest.mark.parametrize("n", [8, 16, 32])
def test_exact_dct_matches_oracle_and_is_orthonormal(n):
    c = exact_dct_matrix(n)
    np.testing.assert_allclose(c, dct_oracle(n), atol=1e-14)
    np.testing.assert_allclose(c @ c.T, np.eye(n), atol=1e-12)


def test_exact_dct_entries():
    c = exact_dct_matrix(8)
    assert c[0, 0] == pytest.approx(1 / np.sqrt(8), abs=1e-15)
    assert c[1, 0] == pytest.approx(np.cos(2 * np.pi / 32) / 2, abs=1e-15)
    assert c[1, 0] == pytest.approx(0.490393, abs=1e-6)


def test_exact_dct_rejects_other_lengths():
    with pytest.raises(ValueError):
        exact_dct_matrix(4)


def test_printed_form_has_row_norm_two_and_normalizes_to_exact():
    p = printed_dct_matrix()
    np.testing.assert_allclose(np.linalg.norm(p, axis=1), 2.0, atol=1e-14)
    np.testing.assert_allclose(p / 2, exact_dct_matrix(8), atol=1e-14)


def test_exact_dct_is_read_only():
    with pytest.raises(ValueError):
        exact_dct_matrix(8)[0, 0] = 1.0


def test_angle_examples():
    u = np.array([1.0, 2, 3])
    assert angle_between(u, u) == pytest.approx(0, abs=1e-7)
    assert angle_between([1, 0], [0, 1]) == pytest.approx(np.pi / 2)
    e1 = np.eye(8)[0]
    a = angle_between(np.ones(8), e1)
    assert a == pytest.approx(1.20943, abs=1e-5)
    assert np.degrees(a) == pytest.approx(69.295, abs=1e-3)


def test_angle_clamps_rounding():
    # cosine slightly above 1 in floating point must not give NaN
    v = np.array([0.1, 0.2, 0.3]) * 3
    assert angle_between(v, v * 7) >= 0
    assert not np.isnan(angle_between(v, -v))
    assert angle_between(v, -v) == pytest.approx(np.pi)


def test_angle_zero_norm():
    with pytest.raises(DomainError):
        angle_between(np.zeros(3), [1, 0, 0])


vec = arrays(np.float64, 6, elements=st.floats(-10, 10, allow_nan=False)).filter(
    lambda v: np.linalg.norm(v) > 1e-3)


@given(vec, vec, st.floats(0.01, 100), st.floats(0.01, 100))
def test_angle_symmetric_and_scale_invariant(u, v, a, b):
    base = angle_between(u, v)
    assert 0 <= base <= np.pi
    assert angle_between(v, u) == pytest.approx(base, abs=1e-12)
    # arccos amplifies rounding near 0 and pi, so compare cosines there
    assert np.cos(angle_between(a * u, b * v)) == pytest.approx(np.cos(base), abs=1e-12)


def test_spd_inverse_sqrt_examples():
    np.testing.assert_array_equal(spd_inverse_sqrt(np.eye(8)), np.eye(8))
    d = np.diag([8.0, 18, 20, 18, 8, 18, 20, 18])
    np.testing.assert_array_equal(spd_inverse_sqrt(d), np.diag(1 / np.sqrt(np.diag(d))))


@st.composite
def spd(draw, n=5):
    a = draw(arrays(np.float64, (n, n), elements=st.floats(-3, 3, allow_nan=False)))
    return a @ a.T + n * np.eye(n)


@given(spd())
def test_spd_inverse_sqrt_random(m):
    s = spd_inverse_sqrt(m)
    np.testing.assert_allclose(s, s.T, atol=1e-12)
    np.testing.assert_allclose(s @ m @ s, np.eye(len(m)), atol=1e-10)
    np.testing.assert_allclose(s @ m, m @ s, atol=1e-10)
    # eigen oracle
    w, v = np.linalg.eigh(m)
    np.testing.assert_allclose(s, v @ np.diag(w ** -0.5) @ v.T, atol=1e-10)


def test_spd_inverse_sqrt_rejects_indefinite():
    with pytest.raises(DomainError):
        spd_inverse_sqrt(np.diag([1.0, -1.0]))


def test_orthogonalize_t1():
    tr = orthogonalize(T1, "T1")
    expected = np.diag(1 / np.sqrt([8, 18, 20, 18, 8, 18, 20, 18]))
    np.testing.assert_allclose(tr.s, expected, atol=1e-15)
    assert tr.scaling_kind == "diagonal-row-norm"
    np.testing.assert_allclose(tr.c_hat, tr.s @ tr.t, atol=1e-12)
    np.testing.assert_allclose(tr.c_hat @ tr.c_hat.T, np.eye(8), atol=1e-12)


def test_orthogonalize_orthonormal_input_gives_identity_scaling():
    tr = orthogonalize(exact_dct_matrix(8))
    np.testing.assert_allclose(tr.s, np.eye(8), atol=1e-12)


def test_orthogonalize_general_spd_kind():
    t = np.array([[1, 1], [0, 1]])
    tr = orthogonalize(t)
    assert tr.scaling_kind == "general-spd"
    assert has_orthonormal_rows(tr.c_hat)


def test_orthogonalize_singular():
    with pytest.raises(DegenerateMatrixError):
        orthogonalize(np.array([[1, 1], [2, 2]]))


@st.composite
def orthogonal_int_rows(draw):
    # Hadamard-style sign matrices with arbitrary integer row scales are row-orthogonal.
    h = np.array([[1]])
    for _ in range(3):
        h = np.block([[h, h], [h, -h]])
    scales = draw(st.lists(st.integers(1, 4), min_size=8, max_size=8))
    perm = draw(st.permutations(range(8)))
    return (h * np.array(scales)[:, None])[list(perm)]


@given(orthogonal_int_rows())
@settings(max_examples=50)
def test_orthogonalize_orthogonal_rows_property(t):
    tr = orthogonalize(t)
    assert tr.scaling_kind == "diagonal-row-norm"
    np.testing.assert_allclose(np.diag(tr.s), 1 / np.linalg.norm(t, axis=1), atol=1e-15)
    assert has_orthonormal_rows(tr.c_hat, 1e-12)


def kron_oracle(a, b):
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb))
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for m in range(cb):
                    out[i * rb + k, j * cb + m] = a[i, j] * b[k, m]
    return out


def test_kronecker_examples():
    d = np.diag([4, 9, 10, 9])
    np.testing.assert_array_equal(kronecker(np.eye(2), d), np.diag([4, 9, 10, 9] * 2))
    d16 = 4 * kronecker(kronecker(np.eye(2), d), np.eye(2))
    np.testing.assert_array_equal(np.diag(d16), [16, 16, 36, 36, 40, 40, 36, 36] * 2)


@given(arrays(np.float64, (2, 2), elements=st.floats(-5, 5)),
       arrays(np.float64, (2, 3), elements=st.floats(-5, 5)))
def test_kronecker_oracle(a, b):
    np.testing.assert_array_equal(kronecker(a, b), kron_oracle(a, b))
