# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mesh/assemble.py
# Description: P1 有限元组装

from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix

from .quadrature import BASIS, WEIGHTS, at_quadrature
from .types import Mesh


def _scatter(mesh: Mesh, local: np.ndarray) -> csr_matrix:
    """ 将单元矩阵 (T, 3, 3) 组装为全局稀疏矩阵, 重复项求和
    """
    rows = np.repeat(mesh.triangles, 3, axis=1).ravel()
    cols = np.tile(mesh.triangles, (1, 3)).ravel()
    return coo_matrix((local.ravel(), (rows, cols)), shape=(mesh.n_nodes, mesh.n_nodes)).tocsr()


@lru_cache(maxsize=8)
def assemble_stiffness(mesh: Mesh) -> csr_matrix:
    """ 刚度矩阵 K[i, j] = ∫ ∇φ_i·∇φ_j dx

    结果按网格缓存并在调用方之间共享, 不要原地修改.

    Args:
        mesh (Mesh): 网格

    Returns:
        csr_matrix: 对称半正定矩阵, 常数向量在其核中
    """
    local = np.einsum('t,tad,tbd->tab', mesh.areas, mesh.gradients, mesh.gradients)
    return _scatter(mesh, local)


def assemble_weighted_mass(mesh: Mesh, coeff: np.ndarray) -> csr_matrix:
    """ 加权质量矩阵 M[i, j] = ∫ c φ_i φ_j dx, c 由求积点上的值 (T, Q) 给出

    Args:
        mesh (Mesh): 网格
        coeff (np.ndarray): 系数在求积点处的值

    Returns:
        csr_matrix: 对称矩阵
    """
    local = np.einsum('t,tq,q,qa,qb->tab', mesh.areas, coeff, WEIGHTS, BASIS, BASIS)
    return _scatter(mesh, local)


@lru_cache(maxsize=8)
def assemble_mass(mesh: Mesh) -> csr_matrix:
    """ 质量矩阵 M[i, j] = ∫ φ_i φ_j dx (求积公式对二次多项式精确)
    """
    return assemble_weighted_mass(mesh, np.ones((mesh.n_triangles, len(WEIGHTS))))


def assemble_nonlinear(mesh: Mesh, q11: np.ndarray, q12: np.ndarray, beta: float) -> np.ndarray:
    """ 非线性项 ∫ (|Q_h|²-β) Q_h φ_i dx 对所有节点 i 的组装

    Args:
        mesh (Mesh): 网格
        q11 (np.ndarray): Q11 节点值
        q12 (np.ndarray): Q12 节点值
        beta (float): 体能参数 β

    Returns:
        np.ndarray: 形状 (N, 2), 第 i 行为两个分量对应的积分
    """
    a = at_quadrature(mesh, q11)
    b = at_quadrature(mesh, q12)
    cubic = a * a + b * b - beta
    out = np.empty((mesh.n_nodes, 2))
    for k, comp in enumerate((a, b)):
        local = np.einsum('t,tq,q,qa->ta', mesh.areas, cubic * comp, WEIGHTS, BASIS)
        out[:, k] = np.bincount(mesh.triangles.ravel(), weights=local.ravel(), minlength=mesh.n_nodes)
    return out


def assemble_bulk_jacobian(mesh: Mesh,
                           q11: np.ndarray,
                           q12: np.ndarray,
                           beta: float) -> tuple[csr_matrix, csr_matrix, csr_matrix]:
    """ 体能项导数的三个块, 分别以 3Q11²+Q12²-β, 2Q11Q12, Q11²+3Q12²-β 为权的质量矩阵

    Args:
        mesh (Mesh): 网格
        q11 (np.ndarray): Q11 节点值
        q12 (np.ndarray): Q12 节点值
        beta (float): 体能参数 β

    Returns:
        tuple[csr_matrix, csr_matrix, csr_matrix]: (M11, M12, M22)
    """
    a = at_quadrature(mesh, q11)
    b = at_quadrature(mesh, q12)
    return (assemble_weighted_mass(mesh, 3 * a * a + b * b - beta),
            assemble_weighted_mass(mesh, 2 * a * b),
            assemble_weighted_mass(mesh, a * a + 3 * b * b - beta))


def quadrature_nonlinear(mesh: Mesh, q, beta: float, test_index: int) -> tuple[float, float]:
    """ 单个测试函数 φ_i 对应的非线性项积分对

    Args:
        mesh (Mesh): 网格
        q (QField): 带 q11, q12 节点值的场
        beta (float): 体能参数 β
        test_index (int): 测试函数对应的节点编号

    Returns:
        tuple[float, float]: (∫(|Q|²-β)Q11 φ_i, ∫(|Q|²-β)Q12 φ_i)
    """
    if not 0 <= test_index < mesh.n_nodes:
        raise IndexError(f'节点编号 {test_index} 越界')
    local = assemble_nonlinear(mesh, q.q11, q.q12, beta)[test_index]
    return float(local[0]), float(local[1])
