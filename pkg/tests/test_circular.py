import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from greedydct import catalog
from greedydct.circular import (
    circular_mean,
    circular_summary,
    circular_variance,
    mean_circular_difference,
    modified_circular_mean_difference,
    row_angles,
)
from greedydct.errors import DomainError
from greedydct.linalg import exact_dct_matrix

C = exact_dct_matrix(8)

# (mean angle in degrees, circular variance, modified mean difference in radians)
TABLE = {
    "DCT": (70.53, 0.0089, 0),
    "T1": (71.12, 0.0124, 0.0711),
    "T2": (71.12, 0.0124, 0.0343),
    "LO": (70.81, 0.0102, 0.0483),
    "SDCT": (69.29, 0, 0.1062),
    "RDCT": (71.98, 0.0174, 0.0716),
    "BAS-2008b": (67.29, 0.0015, 0.1097),
    "T4": (70.57, 0.0085, 0.0781),
    "T6": (71.27, 0.0139, 0.0497),
}

angles = arrays(np.float64, 8, elements=st.floats(0, np.pi))


@pytest.mark.parametrize("name", TABLE)
def test_published_values(name):
    t = C if name == "DCT" else catalog.entry(name).matrix
    theta, v, dmod = circular_summary(t, C)
    e_theta, e_v, e_d = TABLE[name]
    assert theta == pytest.approx(e_theta, abs=0.01)
    assert v == pytest.approx(e_v, abs=5e-4)
    assert dmod == pytest.approx(e_d, abs=5e-4)


def test_row_angles():
    a = row_angles(catalog.sdct_matrix())
    np.testing.assert_allclose(a, np.arccos(1 / np.sqrt(8)), atol=1e-15)
    np.testing.assert_allclose(row_angles(np.eye(8)), [0] + [np.pi / 2] * 7, atol=1e-15)
    with pytest.raises(DomainError):
        row_angles(np.zeros((2, 2)))


@given(st.lists(st.floats(0.1, 10), min_size=8, max_size=8))
def test_row_angles_scale_invariant(scales):
    t = catalog.T1.astype(float)
    np.testing.assert_allclose(row_angles(np.array(scales)[:, None] * t), row_angles(t), atol=1e-12)


@given(st.floats(0, 2 * np.pi, exclude_max=True))
def test_mean_of_equal_angles(a):
    m = circular_mean([a] * 5)
    assert np.cos(m) == pytest.approx(np.cos(a), abs=1e-9)
    assert np.sin(m) == pytest.approx(np.sin(a), abs=1e-9)
    assert 0 <= m < 2 * np.pi + 1e-12


@pytest.mark.parametrize("angle", [0.3, 2.0, 3.5, 5.5, np.pi / 2, 3 * np.pi / 2])
def test_mean_quadrants(angle):
    assert circular_mean([angle - 0.1, angle + 0.1]) == pytest.approx(angle, abs=1e-12)


def test_mean_undefined():
    with pytest.raises(DomainError):
        circular_mean([0, np.pi])


@given(angles)
def test_variance_range(a):
    v = circular_variance(a)
    assert -1e-12 <= v <= 1 + 1e-12


def test_variance_zero_iff_equal():
    assert circular_variance([1.2] * 8) == pytest.approx(0, abs=1e-12)
    assert circular_variance([1.2] * 7 + [1.3]) > 1e-6


def mcd_oracle(a, b):
    total = 0.0
    for x in a:
        for y in b:
            total += np.pi - abs(np.pi - abs(x - y))
    return total / (len(a) * len(b))


def test_mean_circular_difference_oracle():
    a = row_angles(C)
    b = row_angles(catalog.sdct_matrix())
    assert mean_circular_difference(a, b) == pytest.approx(mcd_oracle(a, b), abs=1e-12)
    assert mean_circular_difference(a, a) == pytest.approx(mcd_oracle(a, a), abs=1e-12)


@given(angles, angles)
def test_differences_symmetric(a, b):
    assert mean_circular_difference(a, b) == pytest.approx(mean_circular_difference(b, a), abs=1e-12)
    assert modified_circular_mean_difference(a, b) == pytest.approx(
        modified_circular_mean_difference(b, a), abs=1e-12)
    assert modified_circular_mean_difference(a, a) == 0


def test_identical_sets_of_identical_angles():
    assert mean_circular_difference([1.0] * 4, [1.0] * 4) == 0


def test_wrapping():
    # 0.1 and 2 pi - 0.1 are 0.2 apart on the circle
    assert modified_circular_mean_difference([0.1], [2 * np.pi - 0.1]) == pytest.approx(0.2)
