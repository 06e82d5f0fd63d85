# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mcmc/types.py
# Description: 提议分布与马尔可夫链

from __future__ import annotations
import csv
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

PARAM_NAMES = ('alpha', 'beta')


class InvalidInit(ValueError):
    pass


class ProposalConfig(ABC):
    """ 对称的零均值高斯随机游走提议 q(x, y) = q(y, x)
    """

    @property
    @abstractmethod
    def dim(self) -> int:
        raise NotImplementedError

    @abstractmethod
    def draw(self, rng: np.random.Generator) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def to_dict(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_dict(d: dict) -> ProposalConfig:
        match d['kind']:
            case 'univariate':
                return UnivariateProposal(d['sigma'])
            case 'bivariate':
                return BivariateProposal(d['sigma_alpha'], d['sigma_beta'], d['rho'])
            case kind:
                raise ValueError(f'未知的提议分布: {kind}')


@dataclass(frozen=True)
class UnivariateProposal(ProposalConfig):
    sigma: float

    def __post_init__(self) -> None:
        if not self.sigma > 0:
            raise ValueError(f'sigma 必须为正, 实际为 {self.sigma}')

    @property
    def dim(self) -> int:
        return 1

    def draw(self, rng: np.random.Generator) -> np.ndarray:
        return self.sigma * rng.standard_normal(1)

    def to_dict(self) -> dict:
        return {'kind': 'univariate', 'sigma': self.sigma}


@dataclass(frozen=True)
class BivariateProposal(ProposalConfig):
    sigma_alpha: float
    sigma_beta: float
    rho: float = 0.8

    def __post_init__(self) -> None:
        if not (self.sigma_alpha > 0 and self.sigma_beta > 0):
            raise ValueError('sigma_alpha 与 sigma_beta 必须为正')
        if not abs(self.rho) < 1:
            raise ValueError(f'|rho| 必须小于 1, 实际为 {self.rho}')

    @property
    def dim(self) -> int:
        return 2

    @cached_property
    def cholesky(self) -> np.ndarray:
        c = self.rho * self.sigma_alpha * self.sigma_beta
        return np.linalg.cholesky(np.array([[self.sigma_alpha ** 2, c], [c, self.sigma_beta ** 2]]))

    def draw(self, rng: np.random.Generator) -> np.ndarray:
        return self.cholesky @ rng.standard_normal(2)

    def to_dict(self) -> dict:
        return {'kind': 'bivariate', 'sigma_alpha': self.sigma_alpha,
                'sigma_beta': self.sigma_beta, 'rho': self.rho}


@dataclass
class Chain:
    """ Metropolis-Hastings 链 ξ1..ξN, 初值 ξ0 单独保存

    被拒绝的一步与前一个样本完全相同.
    """
    samples: np.ndarray
    accepted: np.ndarray
    log_probs: np.ndarray
    init: np.ndarray
    rng_seed: int
    proposal: ProposalConfig
    target: str = ''
    extra: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def dim(self) -> int:
        return self.samples.shape[1]

    @property
    def acceptance_rate(self) -> float:
        return float(np.mean(self.accepted)) if len(self.accepted) else float('nan')

    @property
    def names(self) -> tuple[str, ...]:
        return PARAM_NAMES[:self.dim]

    def dump(self, csv_path: str | Path, json_path: str | Path) -> None:
        """ 写出链 CSV (step, alpha[, beta], accepted, log_prob) 与 JSON 附加信息

        浮点数用 repr 写出, 相同种子的两次运行产生逐字节相同的文件.

        Args:
            csv_path (str | Path): 链文件路径
            json_path (str | Path): 附加信息文件路径
        """
        with open(csv_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            writer.writerow(['step', *self.names, 'accepted', 'log_prob'])
            for k, (x, a, lp) in enumerate(zip(self.samples, self.accepted, self.log_probs), start=1):
                writer.writerow([k, *(repr(float(v)) for v in x), int(a), repr(float(lp))])
        with open(json_path, 'w', encoding='utf-8') as f:
            json.dump({
                'seed': self.rng_seed,
                'proposal': self.proposal.to_dict(),
                'init': self.init.tolist(),
                'length': len(self),
                'acceptance_rate': self.acceptance_rate,
                'target': self.target,
                **self.extra,
            }, f, ensure_ascii=False, indent=2)

    @classmethod
    def load(cls, csv_path: str | Path, json_path: str | Path) -> Chain:
        with open(json_path, encoding='utf-8') as f:
            meta = json.load(f)
        with open(csv_path, newline='', encoding='utf-8') as f:
            reader = csv.reader(f)
            header = next(reader)
            rows = list(reader)
        names = header[1:-2]
        samples = np.array([[float(v) for v in r[1:1 + len(names)]] for r in rows]).reshape(len(rows), len(names))
        accepted = np.array([r[-2] == '1' for r in rows], dtype=bool)
        log_probs = np.array([float(r[-1]) for r in rows])
        extra = {k: v for k, v in meta.items()
                 if k not in ('seed', 'proposal', 'init', 'length', 'acceptance_rate', 'target')}
        return cls(samples, accepted, log_probs, np.array(meta['init'], dtype=float), meta['seed'],
                   ProposalConfig.from_dict(meta['proposal']), meta.get('target', ''), extra)
