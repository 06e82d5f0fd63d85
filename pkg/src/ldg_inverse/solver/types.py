# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/solver/types.py
# Description: 求解器的类型与异常

from __future__ import annotations
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from ..model import QField


class BranchSeed(Enum):
    """ 命名的初始猜测, FromField 情形直接传入 QField
    """
    D1 = 'D1'
    D2 = 'D2'
    R1 = 'R1'
    R2 = 'R2'
    R3 = 'R3'
    R4 = 'R4'
    WORS = 'WORS'
    VORTEX = 'VORTEX'


class BranchClass(Enum):
    """ 按角点展曲模式得到的解分类
    """
    DIAGONAL = 'diagonal'
    ROTATED = 'rotated'
    WORS = 'wors'
    VORTEX = 'vortex'
    UNKNOWN = 'unknown'


@dataclass
class SolveReport:
    """ 一次牛顿求解的结果
    """
    converged: bool
    iterations: int
    residual_history: list[float]
    solution: QField
    branch: BranchClass | None = None
    requested: str | None = None
    branch_mismatch: bool = False
    energy: float | None = None
    extra: dict = field(default_factory=dict)

    @property
    def final_residual(self) -> float:
        return self.residual_history[-1] if self.residual_history else float('nan')

    def to_dict(self) -> dict:
        return {
            'converged': self.converged,
            'iterations': self.iterations,
            'final_residual': self.final_residual,
            'residual_history': self.residual_history,
            'branch': self.branch.value if self.branch else None,
            'requested': self.requested,
            'branch_mismatch': self.branch_mismatch,
            'energy': self.energy,
            **self.extra,
        }

    def dump(self, path: str | Path) -> None:
        """ 写出 JSON (不含解场, 解场用 QField.dump 另行保存)

        Args:
            path (str | Path): 文件路径
        """
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, ensure_ascii=False, indent=2)

    def __repr__(self) -> str:
        return (f'SolveReport<converged={self.converged}, iterations={self.iterations}, '
                f'residual={self.final_residual:.3e}, branch={self.branch}>')


class SolverError(RuntimeError):
    pass


class NonConvergence(SolverError):
    """ 牛顿迭代未收敛, report 中为残差最小的迭代值
    """

    def __init__(self, report: SolveReport) -> None:
        super().__init__(f'牛顿迭代在 {report.iterations} 步后未收敛, 最终残差 {report.final_residual:.3e}')
        self.report = report


class SingularLinearSolve(SolverError):
    pass


class BranchMismatchWarning(UserWarning):
    pass
