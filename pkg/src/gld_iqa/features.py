"""Local feature fields: RMS contrast, gradients, and their difference maps.

All windowed statistics use 3x3 neighborhoods over mirror-padded fields,
so every output has the same shape as its input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy import ndimage

from .errors import InvalidArgument
from .image import as_field
from .saliency import SaliencyMap

# Scharr kernels scaled by the sum of their positive taps, so each partial
# derivative of a [0, 1] field stays within [-1, 1] and the gradient
# magnitude within [0, sqrt(2)].
SCHARR_X = np.array([[-3, 0, 3], [-10, 0, 10], [-3, 0, 3]], dtype=np.float64) / 16.0
SCHARR_Y = SCHARR_X.T

MAX_GRAD_MAGNITUDE = np.sqrt(2.0)
MAX_ORIENTATION_DIFF = 2.0 * np.pi

# Derivatives this small are rounding residue of an exactly-zero gradient
# (e.g. at mirrored corners); their angle would be noise in [-pi, pi].
_ZERO_GRAD_EPS = 1e-12


@dataclass(frozen=True)
class FeatureBundle:
    """Per-image features feeding the distortion pipeline."""

    saliency: SaliencyMap
    grad_x: np.ndarray
    grad_y: np.ndarray
    grad_mag: np.ndarray
    grad_ori: np.ndarray
    rms_contrast: np.ndarray


def windows_3x3(field) -> np.ndarray:
    """(H, W, 3, 3) view of all mirror-padded 3x3 neighborhoods."""
    padded = np.pad(as_field(field), 1, mode="reflect")
    return sliding_window_view(padded, (3, 3))


def rms_contrast(field) -> np.ndarray:
    """Population standard deviation of each 3x3 neighborhood.

    Windows are shifted by their center value first; the shift cancels in
    the deviation but makes flat neighborhoods come out exactly zero.
    """
    win = windows_3x3(field)
    centered = win - win[..., 1:2, 1:2]
    mean = centered.mean(axis=(-2, -1))
    dev = centered - mean[..., None, None]
    return np.sqrt((dev * dev).mean(axis=(-2, -1)))


def scharr_gradients(field) -> tuple[np.ndarray, np.ndarray]:
    """Normalized Scharr partial derivatives (horizontal, vertical)."""
    field = as_field(field)
    gx = ndimage.correlate(field, SCHARR_X, mode="mirror")
    gy = ndimage.correlate(field, SCHARR_Y, mode="mirror")
    return gx, gy


def grad_magnitude(gx, gy) -> np.ndarray:
    gx, gy = as_field(gx), as_field(gy)
    _check_same_shape(gx, gy)
    return np.sqrt(gx * gx + gy * gy)


def grad_orientation(gx, gy) -> np.ndarray:
    """Gradient angle in [-pi, pi]; zero where both derivatives vanish.

    Derivatives below a 1e-12 floor are snapped to exactly zero first:
    on the arctangent's branch cut the sign of summation-order residue
    would otherwise flip the angle between +pi and -pi, and a zero
    gradient would get a noise angle instead of the defined 0.
    """
    gx, gy = as_field(gx), as_field(gy)
    _check_same_shape(gx, gy)
    gx = np.where(np.abs(gx) < _ZERO_GRAD_EPS, 0.0, gx)
    gy = np.where(np.abs(gy) < _ZERO_GRAD_EPS, 0.0, gy)
    return np.arctan2(gy, gx)


def lc_diff(contrast_ref, contrast_test) -> np.ndarray:
    """Squared half-difference of the two RMS-contrast fields."""
    a, b = as_field(contrast_ref), as_field(contrast_test)
    _check_same_shape(a, b)
    half = (a - b) / 2.0
    return half * half


def g_diff(mag_ref, mag_test, ori_ref, ori_test) -> np.ndarray:
    """Squared half of the larger normalized gradient discrepancy.

    Magnitude differences are normalized by sqrt(2), orientation
    differences by 2*pi; the orientation difference is the raw absolute
    gap, deliberately not wrapped, so its normalizer is attained.
    """
    m_r, m_t = as_field(mag_ref), as_field(mag_test)
    o_r, o_t = as_field(ori_ref), as_field(ori_test)
    _check_same_shape(m_r, m_t)
    _check_same_shape(o_r, o_t)
    _check_same_shape(m_r, o_r)
    mag_term = np.abs(m_r - m_t) / MAX_GRAD_MAGNITUDE
    ori_term = np.abs(o_r - o_t) / MAX_ORIENTATION_DIFF
    half = np.maximum(mag_term, ori_term) / 2.0
    return half * half


def extract_features(field, saliency: SaliencyMap) -> FeatureBundle:
    gx, gy = scharr_gradients(field)
    return FeatureBundle(
        saliency=saliency,
        grad_x=gx,
        grad_y=gy,
        grad_mag=grad_magnitude(gx, gy),
        grad_ori=grad_orientation(gx, gy),
        rms_contrast=rms_contrast(field),
    )


def _check_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise InvalidArgument(f"shape mismatch: {a.shape} vs {b.shape}")
