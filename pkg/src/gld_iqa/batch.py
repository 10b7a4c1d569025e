"""Parallel scoring of manifest entries.

Workers each load and score one image pair; results are collected in
manifest order, so the numeric output is independent of the worker count.
"""

from __future__ import annotations

import multiprocessing

from .image import load_pair
from .manifest import ManifestEntry
from .saliency import SaliencyMethod
from .score import evaluate_pair


def score_entry(entry: ManifestEntry, method: SaliencyMethod) -> float:
    pair = load_pair(entry.ref_path, entry.test_path)
    return evaluate_pair(pair, method).q


def _score_task(args) -> float:
    entry, method_value = args
    return score_entry(entry, SaliencyMethod(method_value))


def score_manifest(entries: list[ManifestEntry], method: SaliencyMethod, jobs: int = 1) -> list[float]:
    """Objective scores for every entry, in manifest order."""
    method = SaliencyMethod(method)
    if jobs <= 1 or len(entries) < 2:
        return [score_entry(entry, method) for entry in entries]
    tasks = [(entry, method.value) for entry in entries]
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(_score_task, tasks, chunksize=max(1, len(tasks) // (jobs * 4)))
