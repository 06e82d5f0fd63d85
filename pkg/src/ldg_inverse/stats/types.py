# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/stats/types.py
# Description: 链统计量类型与异常

from __future__ import annotations
from dataclasses import dataclass

import numpy as np


class InsufficientLength(ValueError):
    pass


class GammaFloorWarning(UserWarning):
    pass


@dataclass
class ChainStats:
    """ 每个坐标的后验汇总; gamma_sq 与 ci 只在完整统计时给出
    """
    names: tuple[str, ...]
    mean: np.ndarray
    median: np.ndarray
    std: np.ndarray
    n_used: int
    correlation: float | None = None
    gamma_sq: np.ndarray | None = None
    ci: np.ndarray | None = None
    level: float | None = None
    acceptance_rate: float | None = None

    def to_dict(self) -> dict:
        """ 按表格列名 (mean, median, standard deviation, acceptance rate, correlation) 组织
        """
        out = {'n_used': self.n_used}
        for k, name in enumerate(self.names):
            entry = {
                'mean': float(self.mean[k]),
                'median': float(self.median[k]),
                'standard deviation': float(self.std[k]),
            }
            if self.gamma_sq is not None:
                entry['gamma_sq'] = float(self.gamma_sq[k])
            if self.ci is not None:
                entry['ci'] = [float(self.ci[k, 0]), float(self.ci[k, 1])]
                entry['ci level'] = self.level
            out[name] = entry
        if self.acceptance_rate is not None:
            out['acceptance rate'] = self.acceptance_rate
        if self.correlation is not None:
            out['correlation'] = self.correlation
        return out


@dataclass(frozen=True)
class KSResult:
    window: tuple[int, int]
    start: tuple[int, int]
    statistic: float
    critical: float
    passed: bool


@dataclass(frozen=True)
class Histogram:
    edges: np.ndarray
    counts: np.ndarray


@dataclass(frozen=True)
class Histogram2D:
    alpha_edges: np.ndarray
    beta_edges: np.ndarray
    counts: np.ndarray


@dataclass(frozen=True)
class RunningStat:
    n: int
    mean: float
    median: float
    ci: tuple[float, float]

    @property
    def width(self) -> float:
        return self.ci[1] - self.ci[0]
