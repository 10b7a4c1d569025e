"""Full-reference image quality assessment toolkit.

Scores a reference/test image pair by fusing global (saliency) and local
(gradient, contrast) distortion evidence, and ships the benchmark
evaluation harness used to validate such scores against subjective data.
"""

__version__ = "0.1.0"

from .correlation import CorrelationMaps, combine_hc_lc, local_pearson
from .errors import (
    DegenerateSaliency,
    DegenerateSeries,
    GldIqaError,
    IncompatibleReports,
    InvalidArgument,
    InvalidImage,
    PairMismatch,
    ParseError,
)
from .evaluation import (
    LogisticFit,
    MetricRow,
    ScoreSeries,
    aggregate,
    f_critical,
    f_test,
    fit_logistic,
    group_by_distortion,
    krocc,
    logistic_map,
    plcc_mae_rmse,
    srocc,
)
from .features import (
    FeatureBundle,
    g_diff,
    grad_magnitude,
    grad_orientation,
    lc_diff,
    rms_contrast,
    scharr_gradients,
)
from .image import ImagePair, auto_scale, load_pair, pad_symmetric, preprocess_pair, to_grayscale
from .manifest import ManifestEntry, load_manifest
from .report import EvalReport, build_report, compare_reports, read_report, write_report
from .saliency import SaliencyMap, SaliencyMethod, pft_saliency, spectral_residual
from .score import (
    DistortionMap,
    QualityRecord,
    evaluate_pair,
    final_map,
    gated_maps,
    pool,
    primary_map,
    psnr,
    score_pair,
)
