import numpy as np
import pytest

import oracles
from gld_iqa.features import (
    g_diff,
    grad_magnitude,
    grad_orientation,
    lc_diff,
    rms_contrast,
    scharr_gradients,
)


class TestRmsContrast:
    def test_constant_field_zero_contrast(self):
        assert np.all(rms_contrast(np.full((6, 7), 0.8)) == 0.0)

    def test_single_bright_center(self):
        field = np.zeros((5, 5))
        field[2, 2] = 1.0
        # one 1 among eight 0s: mean 1/9, sum of squared deviations 8/9
        assert rms_contrast(field)[2, 2] == pytest.approx(np.sqrt(8.0 / 81.0), abs=1e-15)

    def test_checkerboard_uniform_interior(self):
        field = np.indices((8, 8)).sum(axis=0) % 2.0
        interior = rms_contrast(field)[1:-1, 1:-1]
        assert np.all(interior == interior[0, 0])

    def test_matches_loop_reference(self, rng):
        for _ in range(5):
            field = rng.random((8, 8))
            np.testing.assert_allclose(rms_contrast(field), oracles.naive_rms_contrast(field),
                                       atol=1e-12)

    def test_bounded_by_half(self, rng):
        for _ in range(20):
            field = rng.random((10, 10))
            out = rms_contrast(field)
            assert out.min() >= 0.0 and out.max() <= 0.5


class TestScharr:
    def test_constant_field_zero_gradients(self):
        gx, gy = scharr_gradients(np.full((5, 5), 0.3))
        assert np.all(gx == 0.0) and np.all(gy == 0.0)

    def test_horizontal_ramp(self):
        slope = 0.05
        field = np.tile(np.arange(8) * slope, (6, 1))
        gx, gy = scharr_gradients(field)
        np.testing.assert_allclose(gx[:, 1:-1], 2.0 * slope, atol=1e-14)
        np.testing.assert_allclose(gy, 0.0, atol=1e-14)

    def test_transpose_swaps_gradients(self, rng):
        field = rng.random((7, 9))
        gx, gy = scharr_gradients(field)
        gx_t, gy_t = scharr_gradients(field.T)
        np.testing.assert_allclose(gx_t, gy.T, atol=1e-15)
        np.testing.assert_allclose(gy_t, gx.T, atol=1e-15)

    def test_matches_loop_reference(self, rng):
        for _ in range(5):
            field = rng.random((8, 8))
            gx, gy = scharr_gradients(field)
            ref_gx, ref_gy = oracles.naive_scharr(field)
            np.testing.assert_allclose(gx, ref_gx, atol=1e-12)
            np.testing.assert_allclose(gy, ref_gy, atol=1e-12)

    def test_partial_derivatives_bounded(self, rng):
        for _ in range(20):
            gx, gy = scharr_gradients(rng.random((12, 12)))
            assert np.abs(gx).max() <= 1.0 and np.abs(gy).max() <= 1.0


class TestMagnitudeOrientation:
    def test_unit_x_gradient(self):
        gx = np.ones((2, 2))
        gy = np.zeros((2, 2))
        assert np.all(grad_magnitude(gx, gy) == 1.0)
        assert np.all(grad_orientation(gx, gy) == 0.0)

    def test_negative_y_axis(self):
        gx = np.zeros((2, 2))
        gy = -np.ones((2, 2))
        assert np.all(grad_magnitude(gx, gy) == 1.0)
        np.testing.assert_allclose(grad_orientation(gx, gy), -np.pi / 2)

    def test_diagonal(self):
        gx = np.ones((2, 2))
        gy = np.ones((2, 2))
        np.testing.assert_allclose(grad_magnitude(gx, gy), np.sqrt(2.0))
        np.testing.assert_allclose(grad_orientation(gx, gy), np.pi / 4)

    def test_zero_gradient_orientation_is_zero(self):
        zeros = np.zeros((3, 3))
        assert np.all(grad_orientation(zeros, zeros) == 0.0)

    def test_magnitude_identity_and_range(self, rng):
        gx = rng.uniform(-1, 1, (10, 10))
        gy = rng.uniform(-1, 1, (10, 10))
        mag = grad_magnitude(gx, gy)
        np.testing.assert_allclose(mag, np.sqrt(gx ** 2 + gy ** 2), atol=1e-12)
        assert mag.max() <= np.sqrt(2.0)
        ori = grad_orientation(gx, gy)
        assert ori.min() >= -np.pi and ori.max() <= np.pi


class TestDifferenceMaps:
    def test_lc_diff_zero_for_equal(self, rng):
        v = rng.uniform(0, 0.5, (6, 6))
        assert np.all(lc_diff(v, v) == 0.0)

    def test_lc_diff_attains_maximum(self):
        a = np.full((3, 3), 0.5)
        b = np.zeros((3, 3))
        assert np.all(lc_diff(a, b) == 0.0625)

    def test_lc_diff_symmetric(self, rng):
        a = rng.uniform(0, 0.5, (6, 6))
        b = rng.uniform(0, 0.5, (6, 6))
        np.testing.assert_array_equal(lc_diff(a, b), lc_diff(b, a))

    def test_g_diff_zero_for_identical(self, rng):
        mag = rng.uniform(0, np.sqrt(2), (5, 5))
        ori = rng.uniform(-np.pi, np.pi, (5, 5))
        assert np.all(g_diff(mag, mag, ori, ori) == 0.0)

    def test_g_diff_magnitude_bound_case(self):
        shape = (3, 3)
        full = np.full(shape, np.sqrt(2.0))
        zero = np.zeros(shape)
        assert np.all(g_diff(full, zero, zero, zero) == 0.25)

    def test_g_diff_orientation_bound_case(self):
        shape = (3, 3)
        zero = np.zeros(shape)
        assert np.all(g_diff(zero, zero, np.full(shape, np.pi), np.full(shape, -np.pi)) == 0.25)

    def test_g_diff_symmetric_and_bounded(self, rng):
        m1 = rng.uniform(0, np.sqrt(2), (6, 6))
        m2 = rng.uniform(0, np.sqrt(2), (6, 6))
        o1 = rng.uniform(-np.pi, np.pi, (6, 6))
        o2 = rng.uniform(-np.pi, np.pi, (6, 6))
        out = g_diff(m1, m2, o1, o2)
        np.testing.assert_array_equal(out, g_diff(m2, m1, o2, o1))
        assert out.min() >= 0.0 and out.max() <= 0.25

    def test_range_fuzz_through_real_features(self, rng):
        for _ in range(10):
            a = rng.random((9, 9))
            b = rng.random((9, 9))
            va, vb = rms_contrast(a), rms_contrast(b)
            lc = lc_diff(va, vb)
            assert lc.max() <= 0.0625
            gxa, gya = scharr_gradients(a)
            gxb, gyb = scharr_gradients(b)
            gd = g_diff(grad_magnitude(gxa, gya), grad_magnitude(gxb, gyb),
                        grad_orientation(gxa, gya), grad_orientation(gxb, gyb))
            assert gd.max() <= 0.25
