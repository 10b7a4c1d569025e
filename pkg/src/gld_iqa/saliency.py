"""Bottom-up saliency maps from the frequency domain.

Two interchangeable methods are provided: the spectral-residual map
(log-amplitude minus its local mean, recombined with the original phase)
and the phase-only map (unit amplitude, original phase). Both run at a
fixed working width of 64 pixels and are smoothed with a small Gaussian
before being resampled back to the input geometry.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .image import as_field

WORKING_WIDTH = 64
_LOG_EPS = 1e-10
_SMOOTH_SIGMA = 2.5
_SMOOTH_SIZE = 9
# Spectrum bins this far below the peak amplitude carry no usable phase.
_PHASE_FLOOR = 1e-12


class SaliencyMethod(str, enum.Enum):
    SR = "sr"
    PFT = "pft"


@dataclass(frozen=True)
class SaliencyMap:
    """A nonnegative per-pixel visual-attention field."""

    field: np.ndarray
    method: SaliencyMethod


def fft2_forward(field) -> np.ndarray:
    """Unnormalized forward 2-D DFT of a scalar field (complex output).

    The companion inverse applies the full 1/(H*W) scaling, so
    ``fft2_inverse(fft2_forward(x))`` reproduces ``x``.
    """
    return np.fft.fft2(as_field(field))


def fft2_inverse(spectrum) -> np.ndarray:
    """Scaled inverse 2-D DFT, returning the real part."""
    return np.fft.ifft2(np.asarray(spectrum, dtype=np.complex128)).real


def resize_bilinear(field, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resampling with half-pixel-aligned sample centers."""
    field = as_field(field)
    in_h, in_w = field.shape
    if (in_h, in_w) == (out_h, out_w):
        return field.copy()

    def axis_coords(n_in, n_out):
        pos = (np.arange(n_out) + 0.5) * (n_in / n_out) - 0.5
        pos = np.clip(pos, 0.0, n_in - 1.0)
        lo = np.floor(pos).astype(np.intp)
        hi = np.minimum(lo + 1, n_in - 1)
        return lo, hi, pos - lo

    y0, y1, wy = axis_coords(in_h, out_h)
    x0, x1, wx = axis_coords(in_w, out_w)
    rows = field[y0, :] * (1.0 - wy)[:, None] + field[y1, :] * wy[:, None]
    return rows[:, x0] * (1.0 - wx)[None, :] + rows[:, x1] * wx[None, :]


def _gaussian_kernel(size: int, sigma: float) -> np.ndarray:
    half = (size - 1) / 2.0
    ax = np.arange(size) - half
    xx, yy = np.meshgrid(ax, ax)
    kernel = np.exp(-(xx * xx + yy * yy) / (2.0 * sigma * sigma))
    return kernel / kernel.sum()


_SMOOTH_KERNEL = _gaussian_kernel(_SMOOTH_SIZE, _SMOOTH_SIGMA)


def _working_shape(shape: tuple[int, int]) -> tuple[int, int]:
    h, w = shape
    return max(3, round(h * WORKING_WIDTH / w)), WORKING_WIDTH


def _finish(raw: np.ndarray, out_shape: tuple[int, int]) -> np.ndarray:
    smoothed = ndimage.correlate(raw, _SMOOTH_KERNEL, mode="mirror")
    up = resize_bilinear(smoothed, *out_shape)
    # smoothing/resampling can undershoot zero by rounding noise only
    return np.maximum(up, 0.0)


def spectral_residual(field) -> SaliencyMap:
    """Saliency from the residual of the log-amplitude spectrum."""
    field = as_field(field)
    small = resize_bilinear(field, *_working_shape(field.shape))
    spectrum = np.fft.fft2(small)
    log_amp = np.log(np.abs(spectrum) + _LOG_EPS)
    residual = log_amp - ndimage.uniform_filter(log_amp, size=3, mode="mirror")
    recombined = np.exp(residual) * np.exp(1j * np.angle(spectrum))
    raw = np.abs(np.fft.ifft2(recombined)) ** 2
    return SaliencyMap(_finish(raw, field.shape), SaliencyMethod.SR)


def pft_saliency(field) -> SaliencyMap:
    """Saliency from the phase spectrum alone.

    Amplitudes are replaced by 1 wherever the spectrum carries signal;
    bins whose amplitude is negligible relative to the peak have no
    meaningful phase and are dropped instead of being given unit energy.
    """
    field = as_field(field)
    small = resize_bilinear(field, *_working_shape(field.shape))
    spectrum = np.fft.fft2(small)
    amplitude = np.abs(spectrum)
    phase_only = np.where(
        amplitude > amplitude.max() * _PHASE_FLOOR,
        np.exp(1j * np.angle(spectrum)),
        0.0,
    )
    raw = np.abs(np.fft.ifft2(phase_only)) ** 2
    return SaliencyMap(_finish(raw, field.shape), SaliencyMethod.PFT)


def compute_saliency(field, method: SaliencyMethod | str) -> SaliencyMap:
    method = SaliencyMethod(method)
    if method is SaliencyMethod.SR:
        return spectral_residual(field)
    return pft_saliency(field)
