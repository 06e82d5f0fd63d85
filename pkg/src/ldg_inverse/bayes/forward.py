# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/bayes/forward.py
# Description: 正问题映射 (α, β) -> 模型场

from abc import ABC, abstractmethod

import numpy as np
from loguru import logger

from ..mesh import Mesh
from ..model import BCSpec, QField
from ..solver import SolverConfig, SolverError, newton_solve
from .types import Observation


class ForwardModel(ABC):
    """ 正问题映射; 每条 MCMC 链独享一个实例 (热启动状态是唯一的可变部分)
    """

    @abstractmethod
    def solve(self, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray] | None:
        """ 计算参数点处的模型场

        Args:
            alpha (float): 弹性参数 α
            beta (float): 体能参数 β

        Raises:
            NotImplementedError: 子类需要实现该方法

        Returns:
            tuple[np.ndarray, np.ndarray] | None: 节点值 (F11, F12), 求解失败时为 None
        """
        raise NotImplementedError

    def accept(self) -> None:
        """ 通知最近一次 solve 的参数点已被接受
        """


class PDEForwardModel(ForwardModel):

    def __init__(self,
                 mesh: Mesh,
                 bc: BCSpec,
                 observation: Observation,
                 cfg: SolverConfig | None = None) -> None:
        """ 以牛顿法求解离散 Euler-Lagrange 系统的正问题

        初值取最近一次被接受的解, 失败时退回观测场再试一次, 两次都失败则返回 None.

        Args:
            mesh (Mesh): 网格
            bc (BCSpec): 边界条件
            observation (Observation): 观测, 其场作为初始热启动点与退回点
            cfg (SolverConfig, optional): 求解器配置. Defaults to None.
        """
        if observation.mesh.n_nodes != mesh.n_nodes:
            raise ValueError(f'观测节点数 {observation.mesh.n_nodes} 与网格节点数 {mesh.n_nodes} 不一致')
        self.mesh = mesh
        self.bc = bc
        self.cfg = cfg or SolverConfig()
        self.fallback = QField(mesh, observation.qbar11, observation.qbar12).with_boundary(bc)
        self.anchor = self.fallback
        self.pending: QField | None = None
        self.n_solves = 0
        self.n_fallbacks = 0
        self.n_failures = 0

    def _try(self, seed: QField, alpha: float, beta: float) -> QField | None:
        try:
            return newton_solve(seed, alpha, beta, self.mesh, self.bc, self.cfg).solution
        except SolverError as e:
            logger.debug(f'正问题求解失败 (alpha={alpha:.6g}, beta={beta:.6g}): {e}')
            return None

    def solve(self, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray] | None:
        self.n_solves += 1
        self.pending = None
        solution = self._try(self.anchor, alpha, beta)
        if solution is None and self.anchor is not self.fallback:
            self.n_fallbacks += 1
            solution = self._try(self.fallback, alpha, beta)
        if solution is None:
            self.n_failures += 1
            return None
        self.pending = solution
        return solution.q11, solution.q12

    def accept(self) -> None:
        if self.pending is not None:
            self.anchor = self.pending

    def reset(self) -> None:
        self.anchor = self.fallback
        self.pending = None

    def diagnostics(self) -> dict:
        return {'n_solves': self.n_solves, 'n_fallbacks': self.n_fallbacks, 'n_failures': self.n_failures}
