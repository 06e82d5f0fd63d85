# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/bayes/prior.py
# Description: 先验分布

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np


class Prior(ABC):
    """ 先验基类, 所有变体都限制在各参数为正的区域上
    """

    def log_prob(self, theta) -> float:
        """ 未归一化的对数先验密度, 支撑集外为 -inf

        Args:
            theta (array_like): 参数点, α 或 (α, β)

        Returns:
            float: 对数密度
        """
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        if not np.all(theta > 0):
            return -np.inf
        return self._log_density(theta)

    @abstractmethod
    def _log_density(self, theta: np.ndarray) -> float:
        raise NotImplementedError

    @abstractmethod
    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class UniformPositive(Prior):
    """ 非正常先验 χ(θ > 0)
    """

    def _log_density(self, theta: np.ndarray) -> float:
        return 0.0

    def to_dict(self) -> dict:
        return {'kind': 'uniform'}


@dataclass(frozen=True)
class GaussianTruncated(Prior):
    """ 每个参数独立的截断高斯, center 与 sigma 为标量或与 θ 等长的序列
    """
    center: tuple[float, ...]
    sigma: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'center', tuple(np.atleast_1d(self.center).astype(float).tolist()))
        object.__setattr__(self, 'sigma', tuple(np.atleast_1d(self.sigma).astype(float).tolist()))
        if len(self.center) != len(self.sigma):
            raise ValueError('center 与 sigma 长度不一致')
        if not all(s > 0 for s in self.sigma):
            raise ValueError(f'sigma 必须为正, 实际为 {self.sigma}')

    def _log_density(self, theta: np.ndarray) -> float:
        if len(theta) != len(self.center):
            raise ValueError(f'参数维数 {len(theta)} 与先验维数 {len(self.center)} 不一致')
        z = (theta - np.array(self.center)) / np.array(self.sigma)
        return float(-0.5 * z @ z)

    def to_dict(self) -> dict:
        return {'kind': 'gaussian', 'center': list(self.center), 'sigma': list(self.sigma)}


@dataclass(frozen=True)
class BivariateGaussianTruncated(Prior):
    """ (α, β) 上的相关截断高斯, 二次型为 (z1² - 2ρ z1 z2 + z2²)/(1 - ρ²)
    """
    center: tuple[float, float]
    sigma_alpha: float
    sigma_beta: float
    rho: float

    def __post_init__(self) -> None:
        object.__setattr__(self, 'center', tuple(float(c) for c in self.center))
        if len(self.center) != 2:
            raise ValueError('二元先验的 center 必须有两个分量')
        if not (self.sigma_alpha > 0 and self.sigma_beta > 0):
            raise ValueError('sigma_alpha 与 sigma_beta 必须为正')
        if not abs(self.rho) < 1:
            raise ValueError(f'|rho| 必须小于 1, 实际为 {self.rho}')

    def _log_density(self, theta: np.ndarray) -> float:
        if len(theta) != 2:
            raise ValueError('二元先验需要 (alpha, beta)')
        z1 = (theta[0] - self.center[0]) / self.sigma_alpha
        z2 = (theta[1] - self.center[1]) / self.sigma_beta
        return float(-0.5 * (z1 * z1 - 2 * self.rho * z1 * z2 + z2 * z2) / (1 - self.rho ** 2))

    def to_dict(self) -> dict:
        return {'kind': 'bivariate_gaussian', 'center': list(self.center),
                'sigma': [self.sigma_alpha, self.sigma_beta], 'rho': self.rho}


def log_prior(prior: Prior, theta) -> float:
    return prior.log_prob(theta)
