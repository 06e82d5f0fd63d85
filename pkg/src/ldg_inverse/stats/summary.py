# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/stats/summary.py
# Description: 预烧期, 后验汇总, 自协方差, CLT 方差与置信区间

import warnings

import numpy as np
from loguru import logger
from scipy.stats import norm

from ..mcmc import Chain
from ..mcmc.types import PARAM_NAMES
from .types import ChainStats, GammaFloorWarning, RunningStat

LEVELS = (0.90, 0.95, 0.99)
GAMMA_FLOOR = 1e-6


def discard_burn_in(chain: Chain | np.ndarray, m: int) -> np.ndarray:
    """ 去掉前 m 个样本

    Args:
        chain (Chain | np.ndarray): 链或样本数组
        m (int): 预烧期长度

    Raises:
        ValueError: m < 0 或 m ≥ 链长

    Returns:
        np.ndarray: 第 m+1 个到最后一个样本
    """
    samples = chain.samples if isinstance(chain, Chain) else np.asarray(chain, dtype=float)
    if not 0 <= m < len(samples):
        raise ValueError(f'预烧期长度 {m} 必须在 [0, {len(samples)}) 内')
    return samples[m:]


def _as_2d(segment) -> np.ndarray:
    segment = np.asarray(segment, dtype=float)
    return segment[:, None] if segment.ndim == 1 else segment


def summary(segment) -> ChainStats:
    """ 每个坐标的均值, 中位数 (偶数个取中间两数平均), 标准差 (分母 n-1), 二元时附 Pearson 相关系数

    Raises:
        ValueError: 空片段
    """
    x = _as_2d(segment)
    n = len(x)
    if n == 0:
        raise ValueError('空片段无法统计')
    std = x.std(axis=0, ddof=1) if n > 1 else np.zeros(x.shape[1])
    correlation = None
    if x.shape[1] == 2 and n > 1 and np.all(std > 0):
        correlation = float(np.corrcoef(x[:, 0], x[:, 1])[0, 1])
    return ChainStats(names=PARAM_NAMES[:x.shape[1]],
                      mean=x.mean(axis=0),
                      median=np.median(x, axis=0),
                      std=std,
                      n_used=n,
                      correlation=correlation)


def autocovariance(segment, k: int) -> float:
    """ (1/n) Σ_{t<n-k} (x_t - x̄)(x_{t+k} - x̄)
    """
    x = np.asarray(segment, dtype=float)
    n = len(x)
    if not 0 <= k < n:
        raise ValueError(f'滞后 {k} 必须在 [0, {n}) 内')
    d = x - x.mean()
    return float(d[:n - k] @ d[k:] / n)


def clt_variance(segment, k_max: int = 15) -> float:
    """ γ² = c_0 + 2 Σ_{k=1..K} c_k, K 不超过 n-1

    截断和非正时取 c_0 × 1e-6 并发出 GammaFloorWarning.

    Args:
        segment (array_like): 一维样本
        k_max (int, optional): 截断滞后 K. Defaults to 15.

    Returns:
        float: CLT 长程方差
    """
    if k_max < 1:
        raise ValueError(f'k_max 至少为 1, 实际为 {k_max}')
    x = np.asarray(segment, dtype=float)
    c0 = autocovariance(x, 0)
    gamma_sq = c0 + 2 * sum(autocovariance(x, k) for k in range(1, min(k_max, len(x) - 1) + 1))
    if gamma_sq <= 0 and c0 > 0:
        message = f'截断自协方差和非正 ({gamma_sq:.3e}), 取 c0 × {GAMMA_FLOOR}'
        logger.warning(message)
        warnings.warn(message, GammaFloorWarning, stacklevel=2)
        gamma_sq = c0 * GAMMA_FLOOR
    return float(max(gamma_sq, 0.0))


def normal_quantile(level: float) -> float:
    if not any(np.isclose(level, lv) for lv in LEVELS):
        raise ValueError(f'置信水平必须为 {LEVELS} 之一, 实际为 {level}')
    return float(norm.ppf(0.5 + level / 2))


def confidence_interval(segment, gamma_sq: float, level: float = 0.95) -> tuple[float, float]:
    """ 均值 ± q √(γ²/n)
    """
    x = np.asarray(segment, dtype=float)
    half = normal_quantile(level) * np.sqrt(gamma_sq / len(x))
    mean = float(x.mean())
    return mean - half, mean + half


def central_interval(segment, level: float = 0.95) -> tuple[float, float]:
    """ 样本分位数给出的中心区间
    """
    x = np.asarray(segment, dtype=float)
    lo, hi = np.quantile(x, [0.5 - level / 2, 0.5 + level / 2])
    return float(lo), float(hi)


def chain_stats(chain: Chain | np.ndarray, burn_in: int = 200, k_max: int = 15, level: float = 0.95) -> ChainStats:
    """ 去掉预烧期后的完整统计: 汇总, 每个坐标的 γ² 与置信区间, 以及接受率

    Args:
        chain (Chain | np.ndarray): 链或样本数组
        burn_in (int, optional): 预烧期长度. Defaults to 200.
        k_max (int, optional): γ² 的截断滞后. Defaults to 15.
        level (float, optional): 置信水平. Defaults to 0.95.

    Returns:
        ChainStats: 统计量
    """
    segment = _as_2d(discard_burn_in(chain, burn_in))
    stats = summary(segment)
    stats.gamma_sq = np.array([clt_variance(segment[:, k], k_max) for k in range(segment.shape[1])])
    stats.ci = np.array([confidence_interval(segment[:, k], stats.gamma_sq[k], level)
                         for k in range(segment.shape[1])])
    stats.level = level
    if isinstance(chain, Chain):
        stats.acceptance_rate = chain.acceptance_rate
    return stats


def default_checkpoints(n: int, step: int = 500) -> list[int]:
    return [*range(step, n, step), n]


def running_stats(segment, checkpoints: list[int] | None = None, k_max: int = 15, level: float = 0.95) -> list[RunningStat]:
    """ 长度递增的前缀上的均值, 中位数与置信区间

    Args:
        segment (array_like): 一维样本
        checkpoints (list[int], optional): 前缀长度, 默认每 500 个一档直到全长. Defaults to None.
        k_max (int, optional): γ² 的截断滞后. Defaults to 15.
        level (float, optional): 置信水平. Defaults to 0.95.

    Raises:
        ValueError: 前缀长度越界

    Returns:
        list[RunningStat]: 每个前缀一行
    """
    x = np.asarray(segment, dtype=float)
    checkpoints = checkpoints or default_checkpoints(len(x))
    rows = []
    for n in checkpoints:
        if not 1 <= n <= len(x):
            raise ValueError(f'前缀长度 {n} 必须在 [1, {len(x)}] 内')
        prefix = x[:n]
        gamma_sq = clt_variance(prefix, k_max) if n > 1 else 0.0
        rows.append(RunningStat(n, float(prefix.mean()), float(np.median(prefix)),
                                confidence_interval(prefix, gamma_sq, level)))
    return rows
