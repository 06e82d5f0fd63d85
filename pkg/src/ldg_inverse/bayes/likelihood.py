# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/bayes/likelihood.py
# Description: 误差模型, 对数似然与对数后验

import numpy as np
from loguru import logger

from ..model import ReducedParams
from .forward import ForwardModel
from .prior import Prior
from .types import VARIANCE_TOL, DegenerateObservation, ErrorModel, Observation


def error_variances(obs: Observation) -> ErrorModel:
    """ 观测节点值 Q̄11, Q̄12 的总体方差

    Args:
        obs (Observation): 观测

    Raises:
        DegenerateObservation: 节点数少于 2 或某个分量方差小于 1e-14

    Returns:
        ErrorModel: (σ11², σ12²)
    """
    if len(obs.qbar11) < 2:
        raise DegenerateObservation('观测至少需要 2 个节点')
    s11 = float(np.var(obs.qbar11))
    s12 = float(np.var(obs.qbar12))
    if s11 < VARIANCE_TOL or s12 < VARIANCE_TOL:
        raise DegenerateObservation(f'观测分量近似为常数: σ11²={s11:.3e}, σ12²={s12:.3e}')
    return ErrorModel(s11, s12)


def _unpack(theta) -> tuple[float, float]:
    if isinstance(theta, ReducedParams):
        return theta.alpha, theta.beta
    alpha, beta = theta
    return float(alpha), float(beta)


def log_likelihood(obs: Observation,
                   theta,
                   forward: ForwardModel,
                   error_model: ErrorModel | None = None) -> float:
    """ -½(‖Q̄11 - F11‖²/σ11² + ‖Q̄12 - F12‖²/σ12²), 范数取遍所有节点

    正问题求解失败时返回 -inf, 不抛出异常.

    Args:
        obs (Observation): 观测
        theta (ReducedParams | tuple[float, float]): 参数点 (α, β)
        forward (ForwardModel): 正问题映射
        error_model (ErrorModel, optional): 覆盖观测的经验方差. Defaults to None.

    Returns:
        float: 对数似然, 不大于 0
    """
    alpha, beta = _unpack(theta)
    em = error_model or obs.error_model
    out = forward.solve(alpha, beta)
    if out is None:
        logger.debug(f'似然取 -inf: alpha={alpha:.6g}, beta={beta:.6g} 处正问题无解')
        return -np.inf
    e11 = obs.qbar11 - out[0]
    e12 = obs.qbar12 - out[1]
    return float(-0.5 * (e11 @ e11 / em.sigma11_sq + e12 @ e12 / em.sigma12_sq))


def log_posterior(prior: Prior,
                  obs: Observation,
                  theta,
                  forward: ForwardModel,
                  *,
                  beta: float | None = None,
                  error_model: ErrorModel | None = None) -> float:
    """ 对数先验与对数似然之和, 先验为 -inf 时不做正问题求解

    Args:
        prior (Prior): 先验
        obs (Observation): 观测
        theta (array_like): 先验所在空间的参数点, α 或 (α, β)
        forward (ForwardModel): 正问题映射
        beta (float, optional): θ 只含 α 时固定的 β. Defaults to None.
        error_model (ErrorModel, optional): 覆盖观测的经验方差. Defaults to None.

    Returns:
        float: 未归一化的对数后验
    """
    return Posterior(prior, obs, forward, beta, error_model)(theta)


class Posterior:

    def __init__(self,
                 prior: Prior,
                 obs: Observation,
                 forward: ForwardModel,
                 beta: float | None = None,
                 error_model: ErrorModel | None = None) -> None:
        """ 绑定先验, 观测与正问题的对数后验, 供采样器作为目标函数调用

        Args:
            prior (Prior): 先验
            obs (Observation): 观测
            forward (ForwardModel): 正问题映射
            beta (float, optional): 给定时 θ 只含 α, β 固定为该值. Defaults to None.
            error_model (ErrorModel, optional): 覆盖观测的经验方差. Defaults to None.
        """
        self.prior = prior
        self.obs = obs
        self.forward = forward
        self.beta = beta
        self.error_model = error_model

    @property
    def dim(self) -> int:
        return 1 if self.beta is not None else 2

    def split(self, theta) -> tuple[float, float]:
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        if len(theta) != self.dim:
            raise ValueError(f'参数维数应为 {self.dim}, 实际为 {len(theta)}')
        return (float(theta[0]), self.beta) if self.beta is not None else (float(theta[0]), float(theta[1]))

    def __call__(self, theta) -> float:
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        lp = self.prior.log_prob(theta)
        if lp == -np.inf:
            return -np.inf
        return lp + log_likelihood(self.obs, self.split(theta), self.forward, self.error_model)

    def accept(self, theta=None, log_prob: float | None = None) -> None:
        """ 采样器接受回调: 正问题的热启动点移到刚接受的解
        """
        self.forward.accept()
