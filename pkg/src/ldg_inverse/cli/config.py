# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/cli/config.py
# Description: 实验配置

from __future__ import annotations
import hashlib
import json
import zlib
from pathlib import Path
from typing import Literal

import json5
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..bayes import BivariateGaussianTruncated, GaussianTruncated, Prior, UniformPositive
from ..mcmc import BivariateProposal, ProposalConfig, UnivariateProposal
from ..model import BCSpec, tangent_bc, vortex_bc
from ..solver import BranchSeed, SolverConfig
from .types import ConfigError


class _Model(BaseModel):
    model_config = ConfigDict(extra='forbid')


class BCConfig(_Model):
    kind: Literal['tangent', 'vortex'] = 'tangent'
    d: float = Field(0.06, gt=0, lt=0.5)
    center: tuple[float, float] = (0.25, 0.75)

    def build(self) -> BCSpec:
        match self.kind:
            case 'tangent':
                return tangent_bc(self.d)
            case 'vortex':
                return vortex_bc(*self.center)


class PriorConfig(_Model):
    """ center 缺省时取真值 (α*[, β*])
    """
    kind: Literal['uniform', 'gaussian', 'bivariate_gaussian'] = 'uniform'
    center: list[float] | None = None
    sigma: list[float] | None = None
    rho: float = Field(0.5, gt=-1, lt=1)

    def build(self, truth: list[float]) -> Prior:
        center = self.center or truth
        match self.kind:
            case 'uniform':
                return UniformPositive()
            case 'gaussian':
                if not self.sigma:
                    raise ConfigError('高斯先验需要 sigma')
                return GaussianTruncated(tuple(center), tuple(self.sigma))
            case 'bivariate_gaussian':
                if not self.sigma or len(self.sigma) != 2 or len(center) != 2:
                    raise ConfigError('二元高斯先验需要两个分量的 center 与 sigma')
                return BivariateGaussianTruncated(tuple(center), self.sigma[0], self.sigma[1], self.rho)


class ProposalSpec(_Model):
    kind: Literal['univariate', 'bivariate'] = 'univariate'
    sigma: list[float] = Field(default_factory=lambda: [0.001])
    rho: float = Field(0.8, gt=-1, lt=1)

    @model_validator(mode='after')
    def _check(self) -> ProposalSpec:
        expected = 1 if self.kind == 'univariate' else 2
        if len(self.sigma) != expected:
            raise ValueError(f'{self.kind} 提议需要 {expected} 个 sigma')
        if any(s <= 0 for s in self.sigma):
            raise ValueError('提议 sigma 必须为正')
        return self

    def build(self) -> ProposalConfig:
        match self.kind:
            case 'univariate':
                return UnivariateProposal(self.sigma[0])
            case 'bivariate':
                return BivariateProposal(self.sigma[0], self.sigma[1], self.rho)


class ProfileConfig(_Model):
    lo: float = Field(gt=0)
    hi: float = Field(gt=0)
    points: int = Field(100, ge=1)
    plateau: float = 0.5
    peaked: float = 0.01
    fat_tail: float = 0.02

    @model_validator(mode='after')
    def _check(self) -> ProfileConfig:
        if self.hi < self.lo:
            raise ValueError('profile.hi 不能小于 profile.lo')
        return self

    def grid(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)


class Check(_Model):
    """ 复现检查

    kind: rel_error |v-target|/|target| ≤ tol; bias_rel 0 < (v-target)/target ≤ tol;
    abs_error |v-target| ≤ tol; range lo ≤ v ≤ hi; true bool(v); less v < ref 指向的值;
    equals v == value; any 任一子检查通过.
    """
    kind: Literal['rel_error', 'bias_rel', 'abs_error', 'range', 'true', 'less', 'equals', 'any']
    key: str | None = None
    target: float | None = None
    tol: float | None = None
    lo: float | None = None
    hi: float | None = None
    ref: str | None = None
    value: str | None = None
    children: list[Check] = Field(default_factory=list)


class ExperimentConfig(_Model):
    name: str
    description: str = ''
    mesh_n: int = Field(32, ge=2)
    observation_mesh_n: int | None = Field(None, ge=2)
    bc: BCConfig = Field(default_factory=BCConfig)
    branch: BranchSeed = BranchSeed.D1
    alpha_star: float = Field(gt=0)
    beta_star: float = Field(1.0, gt=0)
    estimate: Literal['alpha', 'alpha_beta'] = 'alpha'
    prior: PriorConfig = Field(default_factory=PriorConfig)
    proposal: ProposalSpec = Field(default_factory=ProposalSpec)
    init: list[float] = Field(default_factory=lambda: [0.005])
    chain_length: int = Field(10000, ge=1)
    burn_in: int = Field(200, ge=0)
    seed: int = Field(20240601, ge=0)
    k_max: int = Field(15, ge=1)
    level: float = 0.95
    ks_period: int = Field(1000, ge=1)
    ks_step: int = Field(10, ge=1)
    ks_alpha: float = 0.05
    bins: int = Field(40, ge=1)
    checkpoints: list[int] | None = None
    profile: ProfileConfig | None = None
    solver: SolverConfig = Field(default_factory=SolverConfig)
    out_dir: str = 'runs'
    published: dict[str, float] = Field(default_factory=dict)
    checks: list[Check] = Field(default_factory=list)

    @model_validator(mode='after')
    def _check(self) -> ExperimentConfig:
        if self.chain_length < self.burn_in + 100:
            raise ValueError(f'chain_length ({self.chain_length}) 至少为 burn_in + 100 ({self.burn_in + 100})')
        if len(self.init) != self.dim:
            raise ValueError(f'init 维数 {len(self.init)} 与待估参数维数 {self.dim} 不一致')
        expected = 1 if self.estimate == 'alpha' else 2
        if (self.proposal.kind == 'univariate') != (expected == 1):
            raise ValueError(f'estimate={self.estimate} 与提议分布 {self.proposal.kind} 不匹配')
        if self.observation_mesh_n is not None and self.observation_mesh_n % self.mesh_n:
            raise ValueError('observation_mesh_n 必须是 mesh_n 的整数倍')
        if self.level not in (0.90, 0.95, 0.99):
            raise ValueError(f'level 必须为 0.90, 0.95 或 0.99, 实际为 {self.level}')
        if self.ks_alpha not in (0.10, 0.05, 0.01):
            raise ValueError(f'ks_alpha 必须为 0.10, 0.05 或 0.01, 实际为 {self.ks_alpha}')
        return self

    @property
    def dim(self) -> int:
        return 1 if self.estimate == 'alpha' else 2

    @property
    def truth(self) -> list[float]:
        return [self.alpha_star] if self.dim == 1 else [self.alpha_star, self.beta_star]

    @property
    def run_dir(self) -> Path:
        return Path(self.out_dir) / self.name


def parse_config(text: str) -> ExperimentConfig:
    """ 解析 JSON5 文本并校验

    Raises:
        ConfigError: 文本不是合法的 JSON5
        pydantic.ValidationError: 字段不合法
    """
    try:
        data = json5.loads(text)
    except ValueError as e:
        raise ConfigError(f'配置不是合法的 JSON5: {e}') from e
    return ExperimentConfig.model_validate(data)


def emit_config(config: ExperimentConfig) -> str:
    return json5.dumps(config.model_dump(mode='json'), indent=2, ensure_ascii=False)


def load_config(path: str | Path) -> ExperimentConfig:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f'配置文件 {path} 不存在')
    return parse_config(path.read_text(encoding='utf-8'))


def save_config(config: ExperimentConfig, path: str | Path) -> None:
    Path(path).write_text(emit_config(config), encoding='utf-8')


def config_hash(config: ExperimentConfig) -> str:
    """ 规范 JSON (键排序) 的 SHA-256
    """
    canonical = json.dumps(config.model_dump(mode='json'), sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def derive_seed(root: int, stage: str) -> int:
    """ 由根种子与阶段名确定性地派生子种子
    """
    ss = np.random.SeedSequence([root, zlib.crc32(stage.encode('utf-8'))])
    return int(ss.generate_state(1, dtype=np.uint64)[0])
