# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/stats/__init__.py
# Description: 链统计接口

from .types import ChainStats, GammaFloorWarning, Histogram, Histogram2D, InsufficientLength, KSResult, RunningStat
from .summary import (autocovariance, central_interval, chain_stats, clt_variance, confidence_interval,
                      default_checkpoints, discard_burn_in, normal_quantile, running_stats, summary)
from .ks import ks_critical_value, ks_stationarity, ks_statistic
from .histogram import bivariate_histogram, histogram
from .utils import write_histogram, write_histogram2d, write_ks_table, write_running_stats, write_stats
