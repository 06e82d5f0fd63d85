# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/model/optics.py
# Description: 三维提升, 介电张量, Stokes 参数与 Berreman 矩阵

import numpy as np
from scipy import constants

from .types import DielectricTensor

_TOL = 1e-12


def lift_to_3d(q11: float, q12: float, q3: float) -> np.ndarray:
    """ 由约化分量与给定常数 q3 构造对称无迹的 3×3 Q 张量
    """
    return np.array([
        [q11 - q3, q12, 0.0],
        [q12, -q11 - q3, 0.0],
        [0.0, 0.0, 2 * q3],
    ])


def dielectric_from_q(qf: np.ndarray, eps_par: float, eps_perp: float, tr_eps: float) -> DielectricTensor:
    """ ε = (tr ε / 3) I + (ε∥ - ε⊥) Q

    Args:
        qf (np.ndarray): 对称无迹 3×3 张量
        eps_par (float): 平行介电常数
        eps_perp (float): 垂直介电常数
        tr_eps (float): 介电张量的迹

    Returns:
        DielectricTensor: 对称 3×3 矩阵
    """
    return tr_eps / 3 * np.eye(3) + (eps_par - eps_perp) * np.asarray(qf, dtype=float)


def q_from_dielectric(eps: DielectricTensor, eps_par: float, eps_perp: float) -> np.ndarray:
    """ Q = (ε - ⅓ tr(ε) I)/(ε∥ - ε⊥)

    Raises:
        ValueError: ε∥ = ε⊥ 时各向异性退化
    """
    if abs(eps_par - eps_perp) < _TOL:
        raise ValueError('ε∥ 与 ε⊥ 相等, 无法由介电张量恢复 Q')
    eps = np.asarray(eps, dtype=float)
    return (eps - np.trace(eps) / 3 * np.eye(3)) / (eps_par - eps_perp)


def stokes(a: float, b: float, delta: float) -> tuple[float, float, float, float]:
    """ 振幅 a, b 与相位差 δ 对应的 Stokes 参数 (S0, S1, S2, S3)
    """
    return (a * a + b * b,
            a * a - b * b,
            2 * a * b * np.cos(delta),
            2 * a * b * np.sin(delta))


def berreman_matrix(eps: DielectricTensor,
                    xi: float,
                    mu0: float = constants.mu_0,
                    c: float = constants.c,
                    eps0: float = constants.epsilon_0) -> np.ndarray:
    """ 由介电张量构造 Berreman 4×4 矩阵

    Args:
        eps (DielectricTensor): 对称介电张量
        xi (float): 入射面内的切向波数分量
        mu0 (float, optional): 真空磁导率. Defaults to constants.mu_0.
        c (float, optional): 光速. Defaults to constants.c.
        eps0 (float, optional): 真空介电常数. Defaults to constants.epsilon_0.

    Raises:
        ValueError: ε33 = 0

    Returns:
        np.ndarray: 4×4 实矩阵
    """
    e = np.asarray(eps, dtype=float)
    e11, e12, e13 = e[0, 0], e[0, 1], e[0, 2]
    e22, e23, e33 = e[1, 1], e[1, 2], e[2, 2]
    if abs(e33) < _TOL:
        raise ValueError('ε33 为 0, Berreman 矩阵奇异')
    r13, r23 = e13 / e33, e23 / e33
    return np.array([
        [-r13 * xi, mu0 * c * (e33 - xi * xi) / e33, -r23 * xi, 0.0],
        [eps0 * c * (e11 - e13 * r13), -r13 * xi, eps0 * c * (e12 - e13 * r23), 0.0],
        [0.0, 0.0, 0.0, mu0 * c],
        [eps0 * c * (e12 - e13 * r23), -r23 * xi, eps0 * c * (e22 - e23 * r23 - xi * xi), 0.0],
    ])
