# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/solver/config.py
# Description: 牛顿求解器配置

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class SolverConfig(BaseModel):
    """ 牛顿求解器配置

    residual_tol 作用于组装残差的欧氏范数; linear_solver 为 'direct' (稀疏 LU) 或 'cg'.
    """
    model_config = ConfigDict(frozen=True, extra='forbid')

    residual_tol: float = Field(1e-10, gt=0)
    max_iter: int = Field(30, ge=1)
    linear_solver: Literal['direct', 'cg'] = 'direct'
    cg_tol: float = Field(1e-12, gt=0)
    cg_maxiter: int | None = Field(None, ge=1)
    line_search: bool = True
    max_halvings: int = Field(8, ge=0)
