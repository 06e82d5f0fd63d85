# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/model/boundary.py
# Description: 边界条件

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from ..mesh.types import BOUNDARY_TOL


class BCSpec(ABC):
    """ 边界条件基类: 把边界点映射为 (Q11, Q12)
    """

    @abstractmethod
    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """ 在给定点上计算边界值

        Args:
            points (np.ndarray): 点坐标, 形状 (k, 2)

        Raises:
            NotImplementedError: 子类需要实现该方法

        Returns:
            np.ndarray: 形状 (k, 2) 的 (Q11, Q12)
        """
        raise NotImplementedError

    @abstractmethod
    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class TangentBC(BCSpec):
    """ 切向边界条件, 用梯形函数 T_d 在角点附近正则化
    """
    d: float = 0.06

    def __post_init__(self) -> None:
        if not 0 < self.d < 0.5:
            raise ValueError(f'梯形参数 d 必须在 (0, 1/2) 内, 实际为 {self.d}')

    def trapezoid(self, t):
        """ T_d(t): 在 [0, d] 上为 t/d, 在 [d, 1-d] 上为 1, 在 [1-d, 1] 上为 (1-t)/d
        """
        t = np.asarray(t, dtype=float)
        return np.clip(np.minimum(np.minimum(t / self.d, 1.0), (1.0 - t) / self.d), 0.0, 1.0)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        x, y = points[:, 0], points[:, 1]
        horizontal = (np.abs(y) < BOUNDARY_TOL) | (np.abs(y - 1) < BOUNDARY_TOL)
        vertical = (np.abs(x) < BOUNDARY_TOL) | (np.abs(x - 1) < BOUNDARY_TOL)
        if not np.all(horizontal | vertical):
            raise ValueError('切向边界条件只能在 ∂Ω 上求值')
        out = np.zeros((len(points), 2))
        out[:, 0] = np.where(horizontal, self.trapezoid(x), -self.trapezoid(y))
        return out

    def to_dict(self) -> dict:
        return {'kind': 'tangent', 'd': self.d}


@dataclass(frozen=True)
class VortexBC(BCSpec):
    """ 以内点 (a1, a2) 为中心的点涡边界条件 Q_b = (x-a1, y-a2)/r
    """
    a1: float = 0.25
    a2: float = 0.75

    def __post_init__(self) -> None:
        if not (0 < self.a1 < 1 and 0 < self.a2 < 1):
            raise ValueError(f'涡心必须严格位于区域内部, 实际为 ({self.a1}, {self.a2})')

    @property
    def center(self) -> tuple[float, float]:
        return self.a1, self.a2

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        offset = points - np.array(self.center)
        r = np.linalg.norm(offset, axis=1)
        if np.any(r < 1e-14):
            raise ValueError('点涡边界条件在涡心处无定义')
        return offset / r[:, None]

    def to_dict(self) -> dict:
        return {'kind': 'vortex', 'center': [self.a1, self.a2]}


def tangent_bc(d: float = 0.06) -> TangentBC:
    return TangentBC(d)


def vortex_bc(a1: float = 0.25, a2: float = 0.75) -> VortexBC:
    return VortexBC(a1, a2)
