# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mcmc/sampler.py
# Description: Metropolis-Hastings 采样器

from typing import Callable

import numpy as np
from loguru import logger
from tqdm import tqdm

from .types import Chain, InvalidInit, ProposalConfig


def make_rng(seed: int) -> np.random.Generator:
    """ PCG64 生成器, 种子相同则跨平台产生相同序列
    """
    return np.random.Generator(np.random.PCG64(seed))


def run_chain(log_target: Callable[[np.ndarray], float],
              init,
              length: int,
              proposal: ProposalConfig,
              rng_seed: int,
              *,
              on_accept: Callable[[np.ndarray, float], None] | None = None,
              progress: bool = False,
              description: str = '') -> Chain:
    """ 随机游走 Metropolis-Hastings

    每一步先抽提议噪声再抽均匀数 u, 当 log u < log π(η) - log π(ξ) 时接受;
    目标为 -inf (或 nan) 的候选总是被拒绝. on_accept 在初值求值后以及每次接受后调用.

    Args:
        log_target (Callable[[np.ndarray], float]): 对数目标密度
        init (array_like): 初值 ξ0
        length (int): 链长 N
        proposal (ProposalConfig): 提议分布
        rng_seed (int): 随机种子
        on_accept (Callable[[np.ndarray, float], None], optional): 接受回调. Defaults to None.
        progress (bool, optional): 显示进度条. Defaults to False.
        description (str, optional): 目标函数描述, 写入链的附加信息. Defaults to ''.

    Raises:
        InvalidInit: log_target(init) = -inf
        ValueError: length < 1 或初值维数与提议分布不符

    Returns:
        Chain: 长度为 N 的链
    """
    if length < 1:
        raise ValueError(f'链长至少为 1, 实际为 {length}')
    x = np.atleast_1d(np.asarray(init, dtype=float)).copy()
    if x.shape != (proposal.dim,):
        raise ValueError(f'初值维数 {x.shape} 与提议分布维数 {proposal.dim} 不一致')
    lp = float(log_target(x))
    if not np.isfinite(lp):
        raise InvalidInit(f'初值 {x.tolist()} 处目标密度为 0 (log = {lp})')
    if on_accept is not None:
        on_accept(x.copy(), lp)

    rng = make_rng(rng_seed)
    samples = np.empty((length, proposal.dim))
    accepted = np.zeros(length, dtype=bool)
    log_probs = np.empty(length)
    n_accept = 0

    bar = tqdm(range(length), desc=description or 'mcmc', disable=not progress)
    for k in bar:
        eta = x + proposal.draw(rng)
        log_u = np.log(rng.random())
        lp_eta = float(log_target(eta))
        if not np.isnan(lp_eta) and log_u < lp_eta - lp:
            x, lp = eta, lp_eta
            accepted[k] = True
            n_accept += 1
            if on_accept is not None:
                on_accept(x.copy(), lp)
        samples[k] = x
        log_probs[k] = lp
        if progress and (k + 1) % 100 == 0:
            bar.set_postfix(acceptance=f'{n_accept / (k + 1):.2%}')

    chain = Chain(samples, accepted, log_probs, np.atleast_1d(np.asarray(init, dtype=float)),
                  rng_seed, proposal, description)
    logger.info(f'MCMC 完成: {length} 步, 接受率 {chain.acceptance_rate:.2%}')
    return chain


def acceptance_rate(chain: Chain) -> float:
    """ 接受步数 / 链长

    Raises:
        ValueError: 空链
    """
    if len(chain.accepted) == 0:
        raise ValueError('空链没有接受率')
    return float(np.count_nonzero(chain.accepted) / len(chain.accepted))
