# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/stats/utils.py
# Description: 统计结果的 CSV/JSON 输出

import csv
import json
from pathlib import Path

from .types import ChainStats, Histogram, Histogram2D, KSResult, RunningStat


def write_stats(stats: ChainStats, path: str | Path, extra: dict | None = None) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump({**stats.to_dict(), **(extra or {})}, f, ensure_ascii=False, indent=2)


def write_ks_table(results: dict[str, list[KSResult]], path: str | Path) -> None:
    """ 每个坐标的 KS 结果写为一张表: coordinate, window_a, window_b, start_a, start_b, statistic, critical, passed
    """
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(['coordinate', 'window_a', 'window_b', 'start_a', 'start_b', 'statistic', 'critical', 'passed'])
        for name, rows in results.items():
            for r in rows:
                writer.writerow([name, *r.window, *r.start, repr(r.statistic), repr(r.critical), int(r.passed)])


def write_histogram(h: Histogram, path: str | Path) -> None:
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(['lo', 'hi', 'count'])
        for lo, hi, c in zip(h.edges[:-1], h.edges[1:], h.counts):
            writer.writerow([repr(float(lo)), repr(float(hi)), int(c)])


def write_histogram2d(h: Histogram2D, path: str | Path) -> None:
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(['alpha_lo', 'alpha_hi', 'beta_lo', 'beta_hi', 'count'])
        for i in range(len(h.alpha_edges) - 1):
            for j in range(len(h.beta_edges) - 1):
                writer.writerow([repr(float(h.alpha_edges[i])), repr(float(h.alpha_edges[i + 1])),
                                 repr(float(h.beta_edges[j])), repr(float(h.beta_edges[j + 1])),
                                 int(h.counts[i, j])])


def write_running_stats(rows: list[RunningStat], path: str | Path) -> None:
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(['n', 'mean', 'median', 'ci_lo', 'ci_hi'])
        for r in rows:
            writer.writerow([r.n, repr(r.mean), repr(r.median), repr(r.ci[0]), repr(r.ci[1])])
