"""Benchmark evaluation statistics.

Rank correlations, a five-parameter logistic regression from objective
onto subjective scores, error metrics on the mapped scores, a variance-
ratio significance test, and cross-database averaging.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats
from scipy.special import betainc, expit

from .errors import DegenerateSeries, InvalidArgument
from .score import QualityRecord

_SSE_STOP = 1e-10
_MAX_ITERATIONS = 2000
_MIN_GROUP = 4


@dataclass(frozen=True)
class ScoreSeries:
    """Paired objective/subjective scores for one evaluated group."""

    objective: np.ndarray
    subjective: np.ndarray
    labels: list[str] | None = None

    def __post_init__(self):
        obj = np.asarray(self.objective, dtype=np.float64)
        subj = np.asarray(self.subjective, dtype=np.float64)
        if obj.ndim != 1 or obj.shape != subj.shape:
            raise InvalidArgument("objective and subjective must be 1-D and equally long")
        if obj.size < _MIN_GROUP:
            raise InvalidArgument(f"series needs at least {_MIN_GROUP} points, got {obj.size}")
        if not (np.all(np.isfinite(obj)) and np.all(np.isfinite(subj))):
            raise InvalidArgument("series contains NaN or infinite values")
        if self.labels is not None and len(self.labels) != obj.size:
            raise InvalidArgument("labels length must match the series")
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "subjective", subj)

    def __len__(self) -> int:
        return self.objective.size


@dataclass(frozen=True)
class LogisticFit:
    """Fitted five-parameter monotone mapping and its residual error."""

    beta: np.ndarray
    converged: bool
    residual_sse: float


@dataclass(frozen=True)
class MetricRow:
    """Evaluation measures for one group (absolute-value convention)."""

    srocc: float
    krocc: float | None
    plcc: float | None
    mae: float | None
    rmse: float | None
    n: int


def _require_series(x, y, minimum=2):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 1 or x.shape != y.shape:
        raise InvalidArgument("inputs must be 1-D and equally long")
    if x.size < minimum:
        raise InvalidArgument(f"need at least {minimum} points, got {x.size}")
    return x, y


def pearson(x, y) -> float:
    """Linear correlation coefficient; degenerate on constant input."""
    x, y = _require_series(x, y)
    dx = x - x.mean()
    dy = y - y.mean()
    denom = np.sqrt((dx * dx).sum() * (dy * dy).sum())
    if denom == 0.0:
        raise DegenerateSeries("constant series has no linear correlation")
    return float(np.clip((dx * dy).sum() / denom, -1.0, 1.0))


def srocc(x, y) -> float:
    """Spearman rank correlation with fractional (average) tie ranks."""
    x, y = _require_series(x, y)
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise DegenerateSeries("constant series has no rank correlation")
    return pearson(stats.rankdata(x), stats.rankdata(y))


def krocc(x, y) -> float:
    """Kendall rank correlation, tie-corrected (tau-b)."""
    x, y = _require_series(x, y)
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise DegenerateSeries("constant series has no rank correlation")
    return float(stats.kendalltau(x, y, variant="b").statistic)


def logistic_map(beta, x) -> np.ndarray:
    """Evaluate the five-parameter logistic-plus-linear mapping."""
    b1, b2, b3, b4, b5 = beta
    z = b2 * (np.asarray(x, dtype=np.float64) - b3)
    return b1 * (expit(z) - 0.5) + b4 * x + b5


def _logistic_jacobian(beta, x):
    b1, b2, b3, _, _ = beta
    z = b2 * (x - b3)
    s = expit(z)
    bell = s * (1.0 - s)
    jac = np.empty((x.size, 5))
    jac[:, 0] = s - 0.5
    jac[:, 1] = b1 * (x - b3) * bell
    jac[:, 2] = -b1 * b2 * bell
    jac[:, 3] = x
    jac[:, 4] = 1.0
    return jac


def _affine_fit(x, y):
    """Closed-form least-squares line, expressed in the logistic family."""
    design = np.column_stack([x, np.ones_like(x)])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    residual = y - design @ coef
    beta = np.array([0.0, 1.0, float(x.mean()), coef[0], coef[1]])
    return beta, float(residual @ residual)


def _levenberg(x, y, beta):
    """Damped least-squares descent from one starting point.

    Steps are accepted only when they reduce the residual sum of squares;
    iteration stops when its relative change drops below 1e-10 (converged)
    or after 2000 iterations / a stall (not converged).
    """
    beta = np.asarray(beta, dtype=np.float64)
    residual = y - logistic_map(beta, x)
    sse = float(residual @ residual)
    lam = 1e-3
    converged = False
    for _ in range(_MAX_ITERATIONS):
        jac = _logistic_jacobian(beta, x)
        grad = jac.T @ residual
        hess = jac.T @ jac
        damping = np.diag(np.diag(hess) + 1e-12)
        accepted = False
        for _ in range(50):
            try:
                step = np.linalg.solve(hess + lam * damping, grad)
            except np.linalg.LinAlgError:
                lam *= 3.0
                continue
            candidate = beta + step
            cand_residual = y - logistic_map(candidate, x)
            cand_sse = float(cand_residual @ cand_residual)
            if cand_sse < sse:
                accepted = True
                break
            lam *= 3.0
        if not accepted:
            break
        improvement = sse - cand_sse
        beta, residual, sse = candidate, cand_residual, cand_sse
        lam = max(lam / 3.0, 1e-12)
        if improvement < _SSE_STOP * max(sse, 1e-300):
            converged = True
            break
    return beta, sse, converged


def fit_logistic(series: ScoreSeries) -> LogisticFit:
    """Least-squares fit of the logistic mapping to a score series.

    The descent runs from the standard starting point and, when the raw
    correlation is negative, from its sign-flipped twin (subjective
    scales run in either direction); the better minimum wins. If both
    runs end above the plain linear fit, the linear fit is returned
    instead (it is a member of the same family).
    """
    x = series.objective
    y = series.subjective
    if np.all(x == x[0]):
        raise DegenerateSeries("constant objective scores cannot be mapped")

    start = np.array([
        float(y.max() - y.min()),
        1.0 / float(x.std()),
        float(x.mean()),
        0.0,
        float(y.mean()),
    ])
    starts = [start]
    if not np.all(y == y[0]) and pearson(x, y) < 0.0:
        starts.append(start * np.array([-1.0, 1.0, 1.0, 1.0, 1.0]))

    beta, sse, converged = min((_levenberg(x, y, s) for s in starts), key=lambda r: r[1])
    affine_beta, affine_sse = _affine_fit(x, y)
    if affine_sse < sse:
        beta, sse, converged = affine_beta, affine_sse, True
    return LogisticFit(beta=beta, converged=converged, residual_sse=sse)


def plcc_mae_rmse(series: ScoreSeries, fit: LogisticFit) -> tuple[float, float, float]:
    """Correlation and error metrics between mapped and subjective scores."""
    mapped = logistic_map(fit.beta, series.objective)
    residual = series.subjective - mapped
    mae = float(np.abs(residual).mean())
    rmse = float(np.sqrt((residual * residual).mean()))
    return pearson(mapped, series.subjective), mae, rmse


def residuals(series: ScoreSeries, fit: LogisticFit) -> np.ndarray:
    return series.subjective - logistic_map(fit.beta, series.objective)


def f_critical(dfn: int, dfd: int, confidence: float = 0.95) -> float:
    """Upper critical value of the F distribution, by bisection.

    The F CDF is expressed through the regularized incomplete beta
    function and inverted to an absolute accuracy of 1e-8.
    """
    if dfn < 1 or dfd < 1:
        raise InvalidArgument("degrees of freedom must be >= 1")
    if not 0.0 < confidence < 1.0:
        raise InvalidArgument("confidence must lie in (0, 1)")

    def cdf(value):
        return betainc(dfn / 2.0, dfd / 2.0, dfn * value / (dfn * value + dfd))

    lo, hi = 0.0, 1.0
    while cdf(hi) < confidence:
        lo, hi = hi, hi * 2.0
        if hi > 1e12:
            raise InvalidArgument("critical value out of range")
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if cdf(mid) < confidence:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def verdict_from_variances(var_a: float, var_b: float, n: int, confidence: float = 0.95) -> int:
    """Three-way significance verdict from two residual variances.

    +1 when method A's variance is significantly smaller than B's at the
    given confidence, -1 when significantly larger, 0 otherwise.
    """
    if n < 3:
        raise InvalidArgument("need at least 3 residuals per method")
    if var_a < 0.0 or var_b < 0.0:
        raise InvalidArgument("variances must be nonnegative")
    if var_a == var_b:
        return 0
    small, large = min(var_a, var_b), max(var_a, var_b)
    ratio = np.inf if small == 0.0 else large / small
    if ratio <= f_critical(n - 1, n - 1, confidence):
        return 0
    return 1 if var_a < var_b else -1


def f_test(residuals_a, residuals_b, confidence: float = 0.95) -> int:
    """Variance-ratio test on two methods' fit residuals (same image set)."""
    res_a, res_b = _require_series(residuals_a, residuals_b, minimum=3)
    var_a = float(res_a.var(ddof=1))
    var_b = float(res_b.var(ddof=1))
    return verdict_from_variances(var_a, var_b, res_a.size, confidence)


def aggregate(rows: list[MetricRow], weights: list[int]) -> tuple[MetricRow, MetricRow]:
    """Direct and count-weighted averages of the correlation measures.

    Error magnitudes (MAE/RMSE) depend on each database's subjective
    scale and are deliberately not averaged.
    """
    if not rows:
        raise InvalidArgument("nothing to aggregate")
    if len(rows) != len(weights):
        raise InvalidArgument("one weight per row required")
    w = np.asarray(weights, dtype=np.float64)
    if np.any(w <= 0):
        raise InvalidArgument("weights must be positive counts")
    total = int(w.sum())

    def averages(values):
        values = np.asarray(values, dtype=np.float64)
        return float(values.mean()), float((values * w).sum() / w.sum())

    direct_s, weighted_s = averages([r.srocc for r in rows])
    direct_k, weighted_k = averages([r.krocc for r in rows])
    direct_p, weighted_p = averages([r.plcc for r in rows])
    direct = MetricRow(srocc=direct_s, krocc=direct_k, plcc=direct_p, mae=None, rmse=None, n=total)
    weighted = MetricRow(srocc=weighted_s, krocc=weighted_k, plcc=weighted_p, mae=None, rmse=None, n=total)
    return direct, weighted


def group_by_distortion(records: list[QualityRecord]) -> dict[str, MetricRow]:
    """Per-distortion Spearman correlation; groups under 4 items are absent."""
    groups: dict[str, list[QualityRecord]] = {}
    for record in records:
        if record.distortion_label is None or record.subjective is None:
            raise InvalidArgument("records need distortion labels and subjective scores")
        groups.setdefault(record.distortion_label, []).append(record)
    rows = {}
    for label in sorted(groups):
        members = groups[label]
        if len(members) < _MIN_GROUP:
            continue
        value = srocc([m.q for m in members], [m.subjective for m in members])
        rows[label] = MetricRow(srocc=abs(value), krocc=None, plcc=None,
                                mae=None, rmse=None, n=len(members))
    return rows


def evaluate_series(series: ScoreSeries) -> tuple[MetricRow, LogisticFit, dict[str, float]]:
    """All five measures for one group, plus signed values for auditing."""
    fit = fit_logistic(series)
    srocc_signed = srocc(series.objective, series.subjective)
    krocc_signed = krocc(series.objective, series.subjective)
    plcc_signed, mae, rmse = plcc_mae_rmse(series, fit)
    row = MetricRow(srocc=abs(srocc_signed), krocc=abs(krocc_signed), plcc=abs(plcc_signed),
                    mae=mae, rmse=rmse, n=len(series))
    signed = {"srocc": srocc_signed, "krocc": krocc_signed, "plcc": plcc_signed}
    return row, fit, signed
