# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/solver/branch.py
# Description: 分支初值, 分支识别与按分支求解

import warnings

import numpy as np
from loguru import logger

from ..mesh import Mesh
from ..model import BCSpec, QField, VortexBC, qfield_from_director
from .config import SolverConfig
from .newton import energy, newton_solve
from .types import BranchClass, BranchMismatchWarning, BranchSeed, SolveReport

# 近角点的探测点沿对角线向内偏移的距离
CORNER_OFFSET = 0.125
# |Q_b| 全部小于该值时视为 WORS
WORS_TOL = 1e-6

# 角点 -> 角平分线坐标系下 Q11 相对于全局 Q12 的符号, 依次为 (0,0), (1,0), (1,1), (0,1)
_CORNERS = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
_INWARD = np.array([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])
_BISECTOR_SIGN = np.array([1.0, -1.0, 1.0, -1.0])

_EXPECTED = {
    BranchSeed.D1: BranchClass.DIAGONAL,
    BranchSeed.D2: BranchClass.DIAGONAL,
    BranchSeed.R1: BranchClass.ROTATED,
    BranchSeed.R2: BranchClass.ROTATED,
    BranchSeed.R3: BranchClass.ROTATED,
    BranchSeed.R4: BranchClass.ROTATED,
    BranchSeed.WORS: BranchClass.WORS,
    BranchSeed.VORTEX: BranchClass.VORTEX,
}


def branch_seed(kind: BranchSeed | QField, mesh: Mesh, bc: BCSpec) -> QField:
    """ 分支的确定性初值, 边界节点被边界条件的插值覆盖

    D1/D2: θ = ±π/4; R1: θ = πy; R2: θ = -πy; R3: θ = πx + π/2; R4: θ = -πx + π/2,
    均取 s = 1; WORS: Q11 = -4(x-y)(x+y-1), Q12 = 0; VORTEX: 绕涡心的单位场.

    Args:
        kind (BranchSeed | QField): 命名初值, 或直接给定的场
        mesh (Mesh): 网格
        bc (BCSpec): 边界条件

    Returns:
        QField: 初值
    """
    x, y = mesh.nodes[:, 0], mesh.nodes[:, 1]
    match kind:
        case QField():
            q = QField(mesh, kind.q11, kind.q12)
        case BranchSeed.D1:
            q = qfield_from_director(mesh, 1.0, np.pi / 4)
        case BranchSeed.D2:
            q = qfield_from_director(mesh, 1.0, -np.pi / 4)
        case BranchSeed.R1:
            q = qfield_from_director(mesh, 1.0, np.pi * y)
        case BranchSeed.R2:
            q = qfield_from_director(mesh, 1.0, -np.pi * y)
        case BranchSeed.R3:
            q = qfield_from_director(mesh, 1.0, np.pi * x + np.pi / 2)
        case BranchSeed.R4:
            q = qfield_from_director(mesh, 1.0, -np.pi * x + np.pi / 2)
        case BranchSeed.WORS:
            q = QField(mesh, -4 * (x - y) * (x + y - 1), np.zeros(mesh.n_nodes))
        case BranchSeed.VORTEX:
            center = np.array(bc.center) if isinstance(bc, VortexBC) else np.array([0.5, 0.5])
            offset = mesh.nodes - center
            r = np.linalg.norm(offset, axis=1)
            safe = np.where(r < 1e-14, 1.0, r)
            unit = np.where((r < 1e-14)[:, None], 0.0, offset / safe[:, None])
            q = QField(mesh, unit[:, 0], unit[:, 1])
        case _:
            raise ValueError(f'未知的分支初值: {kind}')
    return q.with_boundary(bc)


def _corner_nodes(mesh: Mesh) -> np.ndarray:
    interior = mesh.interior_nodes
    targets = _CORNERS + CORNER_OFFSET * _INWARD
    dist = np.linalg.norm(mesh.nodes[interior][None, :, :] - targets[:, None, :], axis=2)
    return interior[np.argmin(dist, axis=1)]


def corner_values(q: QField) -> np.ndarray:
    """ 四个近角点处角平分线坐标系下的 Q11, 正值表示展曲角点
    """
    return _BISECTOR_SIGN * q.q12[_corner_nodes(q.mesh)]


def classify_branch(q: QField, bc: BCSpec) -> BranchClass:
    """ 按近角点的展曲模式分类: 两个对角展曲为 diagonal, 两个相邻展曲为 rotated

    Args:
        q (QField): 解场
        bc (BCSpec): 边界条件

    Returns:
        BranchClass: 分类
    """
    if isinstance(bc, VortexBC):
        return BranchClass.VORTEX
    values = corner_values(q)
    if np.all(np.abs(values) < WORS_TOL):
        return BranchClass.WORS
    splay = np.flatnonzero(values > 0)
    if len(splay) != 2:
        return BranchClass.UNKNOWN
    return BranchClass.DIAGONAL if splay[1] - splay[0] == 2 else BranchClass.ROTATED


def solve_branch(kind: BranchSeed | QField,
                 alpha: float,
                 beta: float,
                 mesh: Mesh,
                 bc: BCSpec,
                 cfg: SolverConfig | None = None) -> SolveReport:
    """ 由分支初值出发做牛顿求解并识别所得分支

    分类与命名初值的预期不符时发出 BranchMismatchWarning 并在报告中标记.

    Args:
        kind (BranchSeed | QField): 分支初值
        alpha (float): 弹性参数 α
        beta (float): 体能参数 β
        mesh (Mesh): 网格
        bc (BCSpec): 边界条件
        cfg (SolverConfig, optional): 求解器配置. Defaults to None.

    Raises:
        NonConvergence: 牛顿迭代未收敛
        SingularLinearSolve: Jacobian 奇异

    Returns:
        SolveReport: 含分支分类与能量的报告
    """
    seed = branch_seed(kind, mesh, bc)
    report = newton_solve(seed, alpha, beta, mesh, bc, cfg)
    report.branch = classify_branch(report.solution, bc)
    report.energy = energy(report.solution, alpha, beta, mesh)
    report.extra['seed_energy'] = energy(seed, alpha, beta, mesh)
    if isinstance(kind, BranchSeed):
        report.requested = kind.value
        expected = _EXPECTED[kind]
        if report.branch is not expected:
            report.branch_mismatch = True
            message = (f'{kind.value} 初值在 alpha={alpha:.6g}, beta={beta:.6g} 下收敛到 '
                       f'{report.branch.value} 分支, 预期为 {expected.value}')
            logger.warning(message)
            warnings.warn(message, BranchMismatchWarning, stacklevel=2)
    logger.debug(f'分支求解完成: {report}')
    return report
