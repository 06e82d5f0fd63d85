# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mesh/quadrature.py
# Description: 三角形上的 4 阶 6 点求积公式

import numpy as np

from .types import Mesh

_A1, _B1, _W1 = 0.10810301816807022736, 0.44594849091596488632, 0.22338158967801146570
_A2, _B2, _W2 = 0.81684757298045851308, 0.09157621350977074346, 0.10995174365532186764

# 重心坐标 (λ0, λ1, λ2), 对应三角形的三个顶点; 权重之和为 1, 积分 = 面积 × Σ w f
BARYCENTRIC = np.array([
    [_A1, _B1, _B1],
    [_B1, _A1, _B1],
    [_B1, _B1, _A1],
    [_A2, _B2, _B2],
    [_B2, _A2, _B2],
    [_B2, _B2, _A2],
])
WEIGHTS = np.array([_W1, _W1, _W1, _W2, _W2, _W2])

# P1 基函数在求积点处的值, phi[q, a] = λ_a
BASIS = BARYCENTRIC


def quadrature_points(mesh: Mesh) -> np.ndarray:
    """ 各单元求积点的物理坐标, 形状 (T, Q, 2)
    """
    return np.einsum('qa,tad->tqd', BARYCENTRIC, mesh.nodes[mesh.triangles])


def at_quadrature(mesh: Mesh, values: np.ndarray) -> np.ndarray:
    """ P1 节点场在各单元求积点处的值, 形状 (T, Q)
    """
    return np.asarray(values, dtype=float)[mesh.triangles] @ BASIS.T


def integrate(mesh: Mesh, integrand: np.ndarray) -> float:
    """ 对求积点上给定的被积函数值 (T, Q) 求全域积分
    """
    return float(mesh.areas @ (integrand @ WEIGHTS))
