"""Evaluation report assembly, serialization, and comparison.

A report is a single JSON document: per-database metric rows (with the
signed correlations kept for auditing), per-distortion Spearman rows,
direct and count-weighted cross-database averages, and a digest of each
database's record set so that two reports can be checked for
comparability before a significance test.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .errors import DegenerateSeries, IncompatibleReports, ParseError
from .evaluation import (
    MetricRow,
    ScoreSeries,
    aggregate,
    evaluate_series,
    group_by_distortion,
    logistic_map,
    verdict_from_variances,
)
from .manifest import ManifestEntry
from .saliency import SaliencyMethod
from .score import QualityRecord

MIN_GROUP = 4


@dataclass(frozen=True)
class DatabaseResult:
    n: int
    metrics: MetricRow
    srocc_signed: float
    krocc_signed: float
    plcc_signed: float
    residual_variance: float
    records_digest: str


@dataclass(frozen=True)
class EvalReport:
    tool_version: str
    saliency_method: str
    timestamp: str
    databases: dict[str, DatabaseResult]
    distortions: dict[str, dict[str, MetricRow]]
    average_direct: MetricRow
    average_weighted: MetricRow
    f_matrix: dict | None = None


def _digest(rows: list[tuple[str, str, str, float]]) -> str:
    lines = sorted(f"{ref}|{test}|{dist}|{subj!r}" for ref, test, dist, subj in rows)
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()


def build_report(entries: list[ManifestEntry], scores: list[float],
                 method: SaliencyMethod, timestamp: str | None = None
                 ) -> tuple[EvalReport, list[dict]]:
    """Assemble a report from scored manifest entries.

    Records are re-sorted deterministically inside each database before
    any statistic is computed, so the report does not depend on manifest
    row order or on scoring parallelism. Also returns the flat per-image
    rows for the records CSV.
    """
    if len(entries) != len(scores):
        raise ValueError("one score per manifest entry required")
    if not entries:
        raise DegenerateSeries("no records to evaluate")
    method = SaliencyMethod(method)

    by_database: dict[str, list[tuple[ManifestEntry, float]]] = {}
    for entry, q in zip(entries, scores):
        by_database.setdefault(entry.database, []).append((entry, q))

    databases: dict[str, DatabaseResult] = {}
    distortions: dict[str, dict[str, MetricRow]] = {}
    csv_rows: list[dict] = []
    for name in sorted(by_database):
        group = sorted(by_database[name],
                       key=lambda item: (str(item[0].ref_path), str(item[0].test_path),
                                         item[0].distortion, item[0].subjective))
        if len(group) < MIN_GROUP:
            raise DegenerateSeries(f"database '{name}' has {len(group)} records; need {MIN_GROUP}")
        objective = np.array([q for _, q in group])
        subjective = np.array([e.subjective for e, _ in group])
        series = ScoreSeries(objective, subjective)
        row, fit, signed = evaluate_series(series)
        mapped = logistic_map(fit.beta, objective)
        residual = subjective - mapped
        records = [
            QualityRecord(q=q, saliency_method=method, ref_id=str(e.ref_path),
                          test_id=str(e.test_path), subjective=e.subjective,
                          distortion_label=e.distortion, database_label=name)
            for e, q in group
        ]
        distortions[name] = group_by_distortion(records)
        databases[name] = DatabaseResult(
            n=len(group),
            metrics=row,
            srocc_signed=signed["srocc"],
            krocc_signed=signed["krocc"],
            plcc_signed=signed["plcc"],
            residual_variance=float(residual.var(ddof=1)),
            records_digest=_digest([(str(e.ref_path), str(e.test_path), e.distortion, e.subjective)
                                    for e, _ in group]),
        )
        for (entry, q), m, r in zip(group, mapped, residual):
            csv_rows.append({
                "ref_id": str(entry.ref_path),
                "test_id": str(entry.test_path),
                "database": name,
                "distortion": entry.distortion,
                "subjective_kind": entry.subjective_kind,
                "subjective": entry.subjective,
                "q": q,
                "mapped": float(m),
                "residual": float(r),
            })

    names = sorted(databases)
    direct, weighted = aggregate([databases[n].metrics for n in names],
                                 [databases[n].n for n in names])
    report = EvalReport(
        tool_version=__version__,
        saliency_method=method.value,
        timestamp=timestamp or datetime.now(timezone.utc).isoformat(),
        databases=databases,
        distortions=distortions,
        average_direct=direct,
        average_weighted=weighted,
    )
    return report, csv_rows


def _metric_row_to_dict(row: MetricRow) -> dict:
    return {"srocc": row.srocc, "krocc": row.krocc, "plcc": row.plcc,
            "mae": row.mae, "rmse": row.rmse, "n": row.n}


def _metric_row_from_dict(data: dict) -> MetricRow:
    return MetricRow(srocc=data["srocc"], krocc=data["krocc"], plcc=data["plcc"],
                     mae=data["mae"], rmse=data["rmse"], n=data["n"])


def report_to_dict(report: EvalReport) -> dict:
    return {
        "tool_version": report.tool_version,
        "saliency_method": report.saliency_method,
        "timestamp": report.timestamp,
        "databases": {
            name: {
                "n": res.n,
                "metrics": _metric_row_to_dict(res.metrics),
                "srocc_signed": res.srocc_signed,
                "krocc_signed": res.krocc_signed,
                "plcc_signed": res.plcc_signed,
                "residual_variance": res.residual_variance,
                "records_digest": res.records_digest,
            }
            for name, res in report.databases.items()
        },
        "distortions": {
            db: {label: _metric_row_to_dict(row) for label, row in rows.items()}
            for db, rows in report.distortions.items()
        },
        "averages": {
            "direct": _metric_row_to_dict(report.average_direct),
            "weighted": _metric_row_to_dict(report.average_weighted),
        },
        "f_matrix": report.f_matrix,
    }


def report_from_dict(data: dict) -> EvalReport:
    try:
        databases = {
            name: DatabaseResult(
                n=res["n"],
                metrics=_metric_row_from_dict(res["metrics"]),
                srocc_signed=res["srocc_signed"],
                krocc_signed=res["krocc_signed"],
                plcc_signed=res["plcc_signed"],
                residual_variance=res["residual_variance"],
                records_digest=res["records_digest"],
            )
            for name, res in data["databases"].items()
        }
        return EvalReport(
            tool_version=data["tool_version"],
            saliency_method=data["saliency_method"],
            timestamp=data["timestamp"],
            databases=databases,
            distortions={
                db: {label: _metric_row_from_dict(row) for label, row in rows.items()}
                for db, rows in data["distortions"].items()
            },
            average_direct=_metric_row_from_dict(data["averages"]["direct"]),
            average_weighted=_metric_row_from_dict(data["averages"]["weighted"]),
            f_matrix=data.get("f_matrix"),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed report: {exc}") from exc


def write_report(report: EvalReport, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(report_to_dict(report), handle, indent=2, sort_keys=True)
        handle.write("\n")


def read_report(path) -> EvalReport:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return report_from_dict(json.load(handle))
    except json.JSONDecodeError as exc:
        raise ParseError(f"report is not valid JSON: {exc}") from exc


RECORD_FIELDS = ["ref_id", "test_id", "database", "distortion",
                 "subjective_kind", "subjective", "q", "mapped", "residual"]


def write_records_csv(rows: list[dict], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=RECORD_FIELDS)
        writer.writeheader()
        writer.writerows(rows)


def records_csv_path(report_path) -> Path:
    report_path = Path(report_path)
    return report_path.with_name(report_path.stem + ".records.csv")


def compare_reports(report_a: EvalReport, report_b: EvalReport,
                    confidence: float = 0.95) -> tuple[dict[str, int], float]:
    """Per-database significance verdicts for report A against report B.

    Both reports must cover identical record sets per database. Returns
    the verdict map and the share of databases (in percent) where A is
    significantly better.
    """
    if set(report_a.databases) != set(report_b.databases):
        raise IncompatibleReports("reports cover different databases")
    verdicts = {}
    for name in sorted(report_a.databases):
        res_a = report_a.databases[name]
        res_b = report_b.databases[name]
        if res_a.n != res_b.n or res_a.records_digest != res_b.records_digest:
            raise IncompatibleReports(f"database '{name}' was scored on different record sets")
        verdicts[name] = verdict_from_variances(res_a.residual_variance, res_b.residual_variance,
                                                res_a.n, confidence)
    improved = sum(1 for v in verdicts.values() if v == 1)
    return verdicts, 100.0 * improved / len(verdicts)
