"""Windowed Pearson correlation between paired fields."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument
from .features import windows_3x3

# Windows with variance below this are treated as constant.
_VAR_EPS = 1e-12


@dataclass(frozen=True)
class CorrelationMaps:
    """Local correlation of saliency and gradient pairs, plus max/min."""

    sm_c: np.ndarray
    x_c: np.ndarray
    y_c: np.ndarray
    h_c: np.ndarray
    l_c: np.ndarray


def local_pearson(a, b) -> np.ndarray:
    """Pearson coefficient of corresponding 3x3 neighborhoods.

    Two constant windows correlate perfectly (1); a constant window
    against a varying one admits no linear relationship (0). Results are
    clamped to [-1, 1] against floating-point overshoot.
    """
    wa, wb = windows_3x3(a), windows_3x3(b)
    if wa.shape != wb.shape:
        raise InvalidArgument(f"shape mismatch: {wa.shape[:2]} vs {wb.shape[:2]}")
    da = wa - wa.mean(axis=(-2, -1))[..., None, None]
    db = wb - wb.mean(axis=(-2, -1))[..., None, None]
    cov = (da * db).mean(axis=(-2, -1))
    var_a = (da * da).mean(axis=(-2, -1))
    var_b = (db * db).mean(axis=(-2, -1))

    flat_a = var_a < _VAR_EPS
    flat_b = var_b < _VAR_EPS
    denom = np.sqrt(var_a * var_b)
    out = np.divide(cov, denom, out=np.zeros_like(cov), where=denom > 0)
    out[flat_a & flat_b] = 1.0
    out[flat_a ^ flat_b] = 0.0
    return np.clip(out, -1.0, 1.0)


def combine_hc_lc(x_c, y_c) -> tuple[np.ndarray, np.ndarray]:
    """Pointwise max and min of the two gradient correlation maps."""
    x_c, y_c = np.asarray(x_c), np.asarray(y_c)
    if x_c.shape != y_c.shape:
        raise InvalidArgument(f"shape mismatch: {x_c.shape} vs {y_c.shape}")
    return np.maximum(x_c, y_c), np.minimum(x_c, y_c)


def correlation_maps(saliency_ref, saliency_test, gx_ref, gx_test, gy_ref, gy_test) -> CorrelationMaps:
    sm_c = local_pearson(saliency_ref, saliency_test)
    x_c = local_pearson(gx_ref, gx_test)
    y_c = local_pearson(gy_ref, gy_test)
    h_c, l_c = combine_hc_lc(x_c, y_c)
    return CorrelationMaps(sm_c=sm_c, x_c=x_c, y_c=y_c, h_c=h_c, l_c=l_c)
