"""Distortion-map fusion and the pooled quality score.

The primary map blends the largest correlation deviation with a
geometric-mean modulator of the contrast and gradient differences. Two
auxiliary maps add back local contrast/gradient evidence at pixels whose
saliency fields agree more than their gradients do. The final map is
pooled with saliency weights into a single score Q; larger Q means worse
perceived quality, and Q is exactly 0 for an identical pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlation import CorrelationMaps, correlation_maps
from .errors import DegenerateSaliency, InvalidArgument
from .features import FeatureBundle, extract_features, g_diff, lc_diff
from .image import ImagePair, as_field
from .saliency import SaliencyMap, SaliencyMethod, compute_saliency

# Fixed score multiplier; purely cosmetic, rank statistics are unaffected.
POOLING_GAIN = 10000.0

# Per-map upper bounds implied by the feature ranges.
MAX_LC_DIFF = 0.0625
MAX_G_DIFF = 0.25
MAX_D_F = 0.625
MAX_Q = POOLING_GAIN * MAX_D_F

DEFAULT_PSNR_CAP = 100.0


@dataclass(frozen=True)
class DistortionMap:
    """Primary, auxiliary, and final per-pixel distortion fields."""

    d_p: np.ndarray
    a: np.ndarray
    b: np.ndarray
    d_f: np.ndarray


@dataclass(frozen=True)
class QualityRecord:
    """One scored reference/test pair."""

    q: float
    saliency_method: SaliencyMethod
    ref_id: str = ""
    test_id: str = ""
    subjective: float | None = None
    distortion_label: str | None = None
    database_label: str | None = None


@dataclass(frozen=True)
class PipelineResult:
    """Every intermediate of a scored pair, for inspection and testing."""

    features_ref: FeatureBundle
    features_test: FeatureBundle
    lc_d: np.ndarray
    g_d: np.ndarray
    correlations: CorrelationMaps
    distortion: DistortionMap
    t: np.ndarray
    q: float


def primary_map(corr: CorrelationMaps, lc_d, g_d) -> tuple[np.ndarray, np.ndarray]:
    """Primary distortion D_p and its modulator T.

    T is the cube root of LC_d * (1 - SM_c)/2 * G_d; D_p scales T by half
    the largest deviation among the correlation terms.
    """
    lc_d, g_d = as_field(lc_d), as_field(g_d)
    t = np.cbrt(lc_d * ((1.0 - corr.sm_c) / 2.0) * g_d)
    deviation = np.maximum.reduce([
        corr.h_c - corr.l_c,  # |H_c - L_c|, nonnegative by construction
        1.0 - corr.x_c,
        1.0 - corr.y_c,
        1.0 - corr.sm_c,
    ])
    return (deviation / 2.0) * t, t


def gated_maps(corr: CorrelationMaps, lc_d, g_d) -> tuple[np.ndarray, np.ndarray]:
    """Auxiliary maps A and B on the strictly-gated set SM_c > L_c."""
    lc_d, g_d = as_field(lc_d), as_field(g_d)
    gate = corr.sm_c > corr.l_c
    a = np.where(gate, np.sqrt(lc_d * (1.0 - corr.sm_c) / 2.0), 0.0)
    b = np.where(gate, np.sqrt(lc_d * g_d), 0.0)
    return a, b


def final_map(d_p, a, b) -> np.ndarray:
    return as_field(d_p) + as_field(a) + as_field(b)


def pool(d_f, s_ref: SaliencyMap | np.ndarray, s_test: SaliencyMap | np.ndarray) -> float:
    """Saliency-weighted mean of the final map, scaled by the fixed gain.

    Each pixel is weighted by the larger of the two saliency values.
    Raises DegenerateSaliency when the weights sum to zero.
    """
    d_f = as_field(d_f)
    w_ref = s_ref.field if isinstance(s_ref, SaliencyMap) else as_field(s_ref)
    w_test = s_test.field if isinstance(s_test, SaliencyMap) else as_field(s_test)
    if not (d_f.shape == w_ref.shape == w_test.shape):
        raise InvalidArgument("pooling fields must share one shape")
    weights = np.maximum(w_ref, w_test)
    total = weights.sum()
    if total <= 0.0:
        raise DegenerateSaliency("saliency weights are identically zero")
    return POOLING_GAIN * float((d_f * weights).sum() / total)


def score_fields(ref, test, saliency_ref, saliency_test,
                 method: SaliencyMethod = SaliencyMethod.SR) -> PipelineResult:
    """Score a preprocessed field pair given raw saliency maps.

    The two saliency maps are normalized jointly by their shared maximum,
    preserving their relative magnitudes for the correlation and pooling
    stages.
    """
    ref, test = as_field(ref), as_field(test)
    s_ref = saliency_ref.field if isinstance(saliency_ref, SaliencyMap) else as_field(saliency_ref)
    s_test = saliency_test.field if isinstance(saliency_test, SaliencyMap) else as_field(saliency_test)
    joint_max = max(s_ref.max(), s_test.max())
    if joint_max <= 0.0:
        raise DegenerateSaliency("saliency weights are identically zero")
    sal_ref = SaliencyMap(s_ref / joint_max, method)
    sal_test = SaliencyMap(s_test / joint_max, method)

    feats_ref = extract_features(ref, sal_ref)
    feats_test = extract_features(test, sal_test)
    lc_d = lc_diff(feats_ref.rms_contrast, feats_test.rms_contrast)
    g_d = g_diff(feats_ref.grad_mag, feats_test.grad_mag,
                 feats_ref.grad_ori, feats_test.grad_ori)
    corr = correlation_maps(sal_ref.field, sal_test.field,
                            feats_ref.grad_x, feats_test.grad_x,
                            feats_ref.grad_y, feats_test.grad_y)
    d_p, t = primary_map(corr, lc_d, g_d)
    a, b = gated_maps(corr, lc_d, g_d)
    d_f = final_map(d_p, a, b)
    q = pool(d_f, sal_ref, sal_test)
    return PipelineResult(
        features_ref=feats_ref,
        features_test=feats_test,
        lc_d=lc_d,
        g_d=g_d,
        correlations=corr,
        distortion=DistortionMap(d_p=d_p, a=a, b=b, d_f=d_f),
        t=t,
        q=q,
    )


def evaluate_pair(pair: ImagePair, method: SaliencyMethod | str = SaliencyMethod.SR) -> PipelineResult:
    """Full pipeline on a preprocessed pair, keeping all intermediates."""
    method = SaliencyMethod(method)
    s_ref = compute_saliency(pair.reference, method)
    s_test = compute_saliency(pair.test, method)
    return score_fields(pair.reference, pair.test, s_ref, s_test, method)


def score_pair(pair: ImagePair, method: SaliencyMethod | str = SaliencyMethod.SR,
               ref_id: str = "", test_id: str = "") -> QualityRecord:
    """Score a preprocessed pair and package the result."""
    method = SaliencyMethod(method)
    result = evaluate_pair(pair, method)
    return QualityRecord(q=result.q, saliency_method=method, ref_id=ref_id, test_id=test_id)


def psnr(pair: ImagePair, cap: float = DEFAULT_PSNR_CAP) -> float:
    """Peak signal-to-noise ratio in dB for unit-range images.

    An identical pair has infinite PSNR; it is reported as ``cap`` so that
    rank-based evaluation stays finite.
    """
    diff = pair.reference - pair.test
    mse = float((diff * diff).mean())
    if mse <= 0.0:
        return cap
    return min(cap, 10.0 * np.log10(1.0 / mse))
