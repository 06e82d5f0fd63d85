# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/stats/histogram.py
# Description: 一维与二维直方图

import numpy as np

from .types import Histogram, Histogram2D


def histogram(segment, bins: int = 40) -> Histogram:
    if bins < 1:
        raise ValueError(f'bins 至少为 1, 实际为 {bins}')
    counts, edges = np.histogram(np.asarray(segment, dtype=float), bins=bins)
    return Histogram(edges, counts)


def bivariate_histogram(segment2, bins: int = 40) -> Histogram2D:
    """ (α, β) 联合直方图, counts[i, j] 对应 α 第 i 个区间与 β 第 j 个区间
    """
    if bins < 1:
        raise ValueError(f'bins 至少为 1, 实际为 {bins}')
    x = np.asarray(segment2, dtype=float)
    if x.ndim != 2 or x.shape[1] != 2:
        raise ValueError(f'二维直方图需要 (n, 2) 的样本, 实际为 {x.shape}')
    counts, a_edges, b_edges = np.histogram2d(x[:, 0], x[:, 1], bins=bins)
    return Histogram2D(a_edges, b_edges, counts.astype(np.int64))
