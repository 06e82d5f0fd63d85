# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/solver/newton.py
# Description: 离散 Euler-Lagrange 系统的残差, Jacobian 与牛顿迭代

import numpy as np
from loguru import logger
from scipy.sparse import bmat, csc_matrix
from scipy.sparse.linalg import cg, splu

from ..mesh import (Mesh, assemble_bulk_jacobian, assemble_nonlinear, assemble_stiffness,
                    at_quadrature, integrate)
from ..model import BCSpec, QField
from .config import SolverConfig
from .types import NonConvergence, SingularLinearSolve, SolveReport


def _full_residual(mesh: Mesh, q11: np.ndarray, q12: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    K = assemble_stiffness(mesh)
    r = assemble_nonlinear(mesh, q11, q12, beta)
    r[:, 0] += alpha * (K @ q11)
    r[:, 1] += alpha * (K @ q12)
    return r


def _restrict(mesh: Mesh, r: np.ndarray) -> np.ndarray:
    free = mesh.interior_nodes
    return np.concatenate([r[free, 0], r[free, 1]])


def residual(q: QField, alpha: float, beta: float, mesh: Mesh, bc: BCSpec | None = None) -> np.ndarray:
    """ 内部节点上的 Galerkin 残差

    未知量排列为 [Q11 (内部节点), Q12 (内部节点)].

    Args:
        q (QField): 场, 边界节点应满足边界条件
        alpha (float): 弹性参数 α
        beta (float): 体能参数 β
        mesh (Mesh): 网格
        bc (BCSpec, optional): 给出时先用其插值覆盖边界节点. Defaults to None.

    Returns:
        np.ndarray: 长度为 2×内部节点数的残差向量
    """
    if bc is not None:
        q = q.with_boundary(bc)
    return _restrict(mesh, _full_residual(mesh, q.q11, q.q12, alpha, beta))


def jacobian(q: QField, alpha: float, beta: float, mesh: Mesh) -> csc_matrix:
    """ 残差关于内部节点未知量的精确线性化

    块结构为 [[αK + M(3Q11²+Q12²-β), M(2Q11Q12)], [M(2Q11Q12), αK + M(Q11²+3Q12²-β)]],
    其中 M(c) 为以 c 为权的质量矩阵; 矩阵是离散能量的 Hessian, 因而对称.

    Args:
        q (QField): 线性化点
        alpha (float): 弹性参数 α
        beta (float): 体能参数 β
        mesh (Mesh): 网格

    Returns:
        csc_matrix: 2m×2m 稀疏矩阵, m 为内部节点数
    """
    free = mesh.interior_nodes
    K = assemble_stiffness(mesh)
    M11, M12, M22 = assemble_bulk_jacobian(mesh, q.q11, q.q12, beta)

    def sub(A):
        return A[free][:, free]

    return bmat([[sub(alpha * K + M11), sub(M12)],
                 [sub(M12), sub(alpha * K + M22)]], format='csc')


def energy(q: QField, alpha: float, beta: float, mesh: Mesh) -> float:
    """ 离散约化能量 ∫ α/2 |∇Q|² + ¼ (|Q|² - β)² dx
    """
    K = assemble_stiffness(mesh)
    elastic = 0.5 * alpha * float(q.q11 @ (K @ q.q11) + q.q12 @ (K @ q.q12))
    a = at_quadrature(mesh, q.q11)
    b = at_quadrature(mesh, q.q12)
    return elastic + 0.25 * integrate(mesh, (a * a + b * b - beta) ** 2)


def _linear_solve(J: csc_matrix, rhs: np.ndarray, cfg: SolverConfig) -> np.ndarray:
    match cfg.linear_solver:
        case 'direct':
            try:
                dx = splu(J).solve(rhs)
            except RuntimeError as e:
                raise SingularLinearSolve(f'Jacobian 奇异: {e}') from e
        case 'cg':
            dx, info = cg(J, rhs, rtol=cfg.cg_tol, maxiter=cfg.cg_maxiter)
            if info < 0:
                raise SingularLinearSolve(f'共轭梯度法失败 (info={info})')
            if info > 0:
                logger.debug(f'共轭梯度法在 {info} 步内未达到容差 {cfg.cg_tol}')
        case _:
            raise ValueError(f'未知的线性求解器: {cfg.linear_solver}')
    if not np.all(np.isfinite(dx)):
        raise SingularLinearSolve('线性求解结果含非有限值')
    return dx


def newton_solve(seed: QField,
                 alpha: float,
                 beta: float,
                 mesh: Mesh,
                 bc: BCSpec | None,
                 cfg: SolverConfig | None = None) -> SolveReport:
    """ 牛顿迭代 Q^{k+1} = Q^k + δQ, 只更新内部节点

    迭代前先检查残差, 已收敛的初值返回 0 步. 开启线搜索时步长逐次减半直到残差范数下降,
    都不下降则取完整步.

    Args:
        seed (QField): 初值
        alpha (float): 弹性参数 α
        beta (float): 体能参数 β
        mesh (Mesh): 网格
        bc (BCSpec | None): 边界条件, 为 None 时沿用初值的边界节点值
        cfg (SolverConfig, optional): 求解器配置. Defaults to None.

    Raises:
        NonConvergence: max_iter 步内残差未降到 residual_tol 以下, 或残差出现非有限值
        SingularLinearSolve: Jacobian 奇异

    Returns:
        SolveReport: 收敛的结果
    """
    cfg = cfg or SolverConfig()
    if seed.mesh.n_nodes != mesh.n_nodes:
        raise ValueError(f'初值节点数 {seed.mesh.n_nodes} 与网格节点数 {mesh.n_nodes} 不一致')
    q = seed.with_boundary(bc) if bc is not None else QField(mesh, seed.q11, seed.q12)
    free = mesh.interior_nodes
    m = len(free)

    def unpack(x: np.ndarray) -> None:
        q.q11[free] = x[:m]
        q.q12[free] = x[m:]

    def F(x: np.ndarray) -> np.ndarray:
        unpack(x)
        return _restrict(mesh, _full_residual(mesh, q.q11, q.q12, alpha, beta))

    x = np.concatenate([q.q11[free], q.q12[free]])
    r = F(x)
    norm = float(np.linalg.norm(r))
    best_x, best_norm = x.copy(), np.inf
    history: list[float] = []
    iterations = 0
    converged = False

    while True:
        history.append(norm)
        logger.trace(f'牛顿迭代 {iterations}: |F| = {norm:.3e}')
        if not np.isfinite(norm):
            break
        if norm < best_norm:
            best_x, best_norm = x.copy(), norm
        if norm <= cfg.residual_tol:
            converged = True
            break
        if iterations >= cfg.max_iter:
            break
        unpack(x)
        dx = _linear_solve(jacobian(q, alpha, beta, mesh), -r, cfg)
        x, r, norm = _step(F, x, dx, norm, cfg)
        iterations += 1

    unpack(best_x)
    report = SolveReport(converged=converged,
                         iterations=iterations,
                         residual_history=history,
                         solution=q.copy())
    if not converged:
        logger.debug(f'牛顿迭代未收敛 (alpha={alpha:.6g}, beta={beta:.6g}): {history[-1]:.3e}')
        raise NonConvergence(report)
    logger.trace(f'牛顿迭代收敛 (alpha={alpha:.6g}, beta={beta:.6g}), {iterations} 步')
    return report


def _step(F, x: np.ndarray, dx: np.ndarray, norm: float, cfg: SolverConfig) -> tuple[np.ndarray, np.ndarray, float]:
    if cfg.line_search:
        t = 1.0
        for _ in range(cfg.max_halvings + 1):
            trial = x + t * dx
            r = F(trial)
            trial_norm = float(np.linalg.norm(r))
            if trial_norm < norm:
                return trial, r, trial_norm
            t *= 0.5
        logger.trace('线搜索未能降低残差, 取完整牛顿步')
    trial = x + dx
    r = F(trial)
    return trial, r, float(np.linalg.norm(r))
