# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/stats/ks.py
# Description: 分批 Kolmogorov-Smirnov 平稳性检验

import numpy as np
from loguru import logger
from scipy.stats import ks_2samp

from .types import InsufficientLength, KSResult

# 两样本 KS 渐近临界系数 c(α)
KS_COEFFICIENTS = {0.10: 1.22, 0.05: 1.36, 0.01: 1.63}


def ks_statistic(a, b) -> float:
    """ 两样本 KS 统计量 sup |F_a - F_b|
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if len(a) == 0 or len(b) == 0:
        raise ValueError('两个样本都不能为空')
    return float(ks_2samp(a, b).statistic)


def ks_critical_value(m: int, n: int | None = None, alpha_level: float = 0.05) -> float:
    """ c(α) √((m+n)/(m n)), 大小均为 m 时即 c(α) √(2/m)
    """
    n = m if n is None else n
    if alpha_level not in KS_COEFFICIENTS:
        raise ValueError(f'显著性水平必须为 {tuple(KS_COEFFICIENTS)} 之一, 实际为 {alpha_level}')
    return KS_COEFFICIENTS[alpha_level] * float(np.sqrt((m + n) / (m * n)))


def ks_stationarity(segment, period: int = 1000, g: int = 10, alpha_level: float = 0.05) -> list[KSResult]:
    """ 对相继的长度为 period 的不交窗口按步长 g 稀疏化, 两两比较相邻窗口

    Args:
        segment (array_like): 一维样本
        period (int, optional): 窗口长度. Defaults to 1000.
        g (int, optional): 批步长. Defaults to 10.
        alpha_level (float, optional): 显著性水平. Defaults to 0.05.

    Raises:
        InsufficientLength: 不足两个完整窗口

    Returns:
        list[KSResult]: 每对相邻窗口一行
    """
    x = np.asarray(segment, dtype=float)
    if period < 1 or g < 1:
        raise ValueError('period 与 g 必须为正整数')
    n_windows = len(x) // period
    if n_windows < 2:
        raise InsufficientLength(f'样本长度 {len(x)} 不足两个长度为 {period} 的窗口')
    batches = [x[i * period:(i + 1) * period:g] for i in range(n_windows)]
    results = []
    for i in range(n_windows - 1):
        stat = ks_statistic(batches[i], batches[i + 1])
        critical = ks_critical_value(len(batches[i]), len(batches[i + 1]), alpha_level)
        results.append(KSResult((i, i + 1), (i * period, (i + 1) * period), stat, critical, stat < critical))
    n_failed = sum(not r.passed for r in results)
    if n_failed:
        logger.warning(f'KS 平稳性检验: {n_failed}/{len(results)} 对窗口未通过')
    return results
