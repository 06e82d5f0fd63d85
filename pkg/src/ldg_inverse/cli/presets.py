# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/cli/presets.py
# Description: 内置实验预设: 发表的设置, 发表的数值与复现容差

from .config import Check, ExperimentConfig
from .types import ConfigError

SIGMA0 = 0.0005


def _one_parameter(name: str, branch: str, prior: str, published: dict, acceptance: float) -> ExperimentConfig:
    gaussian = prior == 'gp'
    return ExperimentConfig.model_validate({
        'name': name,
        'description': f'{branch} 观测, α* = 0.004 的单参数辨识 ({"高斯" if gaussian else "均匀"}先验)',
        'branch': branch,
        'alpha_star': 0.004,
        'beta_star': 1.0,
        'estimate': 'alpha',
        'prior': {'kind': 'gaussian', 'sigma': [SIGMA0]} if gaussian else {'kind': 'uniform'},
        'proposal': {'kind': 'univariate', 'sigma': [0.001]},
        'init': [0.005],
        'chain_length': 10000,
        'burn_in': 200,
        'published': published,
        'checks': [
            {'kind': 'rel_error', 'key': 'alpha.mean', 'target': 0.004, 'tol': 0.10},
            {'kind': 'abs_error', 'key': 'acceptance_rate', 'target': acceptance, 'tol': 0.10},
            {'kind': 'true', 'key': 'alpha.ci_contains_truth'},
        ],
    })


def _two_parameter(name: str, branch: str, prior: str, alpha_star: float, beta_star: float,
                   proposal_sigma: list[float], init: list[float], published: dict,
                   checks: list[dict]) -> ExperimentConfig:
    gaussian = prior == 'gp'
    return ExperimentConfig.model_validate({
        'name': name,
        'description': f'{branch} 观测, (α*, β*) = ({alpha_star}, {beta_star}) 的双参数辨识',
        'branch': branch,
        'alpha_star': alpha_star,
        'beta_star': beta_star,
        'estimate': 'alpha_beta',
        'prior': ({'kind': 'bivariate_gaussian', 'sigma': [SIGMA0, 0.1], 'rho': 0.5}
                  if gaussian else {'kind': 'uniform'}),
        'proposal': {'kind': 'bivariate', 'sigma': proposal_sigma, 'rho': 0.8},
        'init': init,
        'chain_length': 10000,
        'burn_in': 200,
        'published': published,
        'checks': checks,
    })


def _table4(name: str, branch: str, prior: str, published: dict) -> ExperimentConfig:
    return _two_parameter(name, branch, prior, 0.004, 0.6, [0.001, 0.1], [0.01, 0.5], published, [
        {'kind': 'rel_error', 'key': 'alpha.mean', 'target': 0.004, 'tol': 0.10},
        {'kind': 'rel_error', 'key': 'beta.mean', 'target': 0.6, 'tol': 0.02},
        {'kind': 'range', 'key': 'correlation', 'lo': 0.6},
        {'kind': 'abs_error', 'key': 'acceptance_rate', 'target': published['acceptance_rate'], 'tol': 0.08},
    ])


def _table5(name: str, branch: str, prior: str, published: dict) -> ExperimentConfig:
    alpha_check = ({'kind': 'rel_error', 'key': 'alpha.mean', 'target': 0.0008, 'tol': 0.15} if branch == 'D1'
                   else {'kind': 'bias_rel', 'key': 'alpha.mean', 'target': 0.0008, 'tol': 0.30})
    return _two_parameter(name, branch, prior, 0.0008, 1.4, [0.005, 0.1], [0.005, 0.8], published, [
        alpha_check,
        {'kind': 'rel_error', 'key': 'beta.mean', 'target': 1.4, 'tol': 0.015},
        {'kind': 'range', 'key': 'correlation', 'lo': 0.3, 'hi': 0.7},
    ])


def _vortex(name: str, alpha_star: float, lo: float, hi: float, checks: list[dict]) -> ExperimentConfig:
    return ExperimentConfig.model_validate({
        'name': name,
        'description': f'点涡边界条件, α* = {alpha_star} 的可辨识性研究',
        'bc': {'kind': 'vortex', 'center': [0.25, 0.75]},
        'branch': 'VORTEX',
        'alpha_star': alpha_star,
        'beta_star': 1.0,
        'estimate': 'alpha',
        'prior': {'kind': 'uniform'},
        'proposal': {'kind': 'univariate', 'sigma': [0.25 * alpha_star]},
        'init': [1.25 * alpha_star],
        'chain_length': 30000,
        'burn_in': 200,
        'profile': {'lo': lo, 'hi': hi, 'points': 100},
        'checks': checks,
    })


def _table(alpha_mean, alpha_median, alpha_std, acceptance) -> dict:
    return {'alpha.mean': alpha_mean, 'alpha.median': alpha_median,
            'alpha.std': alpha_std, 'acceptance_rate': acceptance}


def _table2d(alpha_mean, alpha_median, beta_mean, beta_median, correlation, acceptance) -> dict:
    return {'alpha.mean': alpha_mean, 'alpha.median': alpha_median,
            'beta.mean': beta_mean, 'beta.median': beta_median,
            'correlation': correlation, 'acceptance_rate': acceptance}


_PRESET_LIST = [
    _one_parameter('table2-up', 'D1', 'up', _table(0.0040195, 0.0040126, 0.0004108, 0.65), 0.65),
    _one_parameter('table2-gp', 'D1', 'gp', _table(0.0039962, 0.0039969, 0.0002121, 0.45), 0.45),
    _one_parameter('table3-up', 'R4', 'up', _table(0.0039951, 0.0039996, 0.0004258, 0.66), 0.66),
    _one_parameter('table3-gp', 'R4', 'gp', _table(0.0040011, 0.0039999, 0.0002129, 0.44), 0.44),
    _table4('table4-d1-up', 'D1', 'up', _table2d(0.0041841, 0.0041460, 0.6060851, 0.6054822, 0.8654732, 0.17)),
    _table4('table4-d1-gp', 'D1', 'gp', _table2d(0.0040616, 0.0040508, 0.6017940, 0.6020828, 0.8332836, 0.14)),
    _table4('table4-r4-up', 'R4', 'up', _table2d(0.0041191, 0.0041147, 0.6085217, 0.6077666, 0.9258516, 0.22)),
    _table4('table4-r4-gp', 'R4', 'gp', _table2d(0.0040311, 0.0040217, 0.6023924, 0.6016717, 0.9064120, 0.19)),
    _table5('table5-d1-up', 'D1', 'up', _table2d(0.0008587, 0.0008478, 1.4044713, 1.4055363, 0.4372786, 0.16)),
    _table5('table5-d1-gp', 'D1', 'gp', _table2d(0.0008596, 0.0008417, 1.4037591, 1.4046242, 0.4318876, 0.15)),
    _table5('table5-r4-up', 'R4', 'up', _table2d(0.0009278, 0.0008725, 1.4134830, 1.4139106, 0.4805958, 0.31)),
    _table5('table5-r4-gp', 'R4', 'gp', _table2d(0.0009292, 0.0008886, 1.4113185, 1.4106873, 0.4865024, 0.30)),
    _vortex('fig14-alpha1', 1.0, 0.1, 5.0, [
        {'kind': 'range', 'key': 'profile.flatness', 'lo': 0.5},
        {'kind': 'equals', 'key': 'profile.verdict', 'value': 'plateau'},
        {'kind': 'any', 'children': [
            {'kind': 'range', 'key': 'alpha.ks_fail_fraction', 'lo': 0.5},
            {'kind': 'range', 'key': 'alpha.ci_width', 'lo': 1.0},
        ]},
    ]),
    _vortex('fig14-alpha0.1', 0.1, 0.01, 0.5, [
        {'kind': 'equals', 'key': 'profile.verdict', 'value': 'fat-tail'},
    ]),
    _vortex('fig14-alpha0.01', 0.01, 0.001, 0.1, [
        {'kind': 'range', 'key': 'profile.flatness', 'hi': 0.01},
        {'kind': 'equals', 'key': 'profile.verdict', 'value': 'peaked'},
        {'kind': 'range', 'key': 'alpha.ks_fail_fraction', 'hi': 0.5},
        {'kind': 'true', 'key': 'alpha.central_contains_truth'},
    ]),
]

PRESETS: dict[str, ExperimentConfig] = {p.name: p for p in _PRESET_LIST}

# 复现编号 -> 预设列表, 跨预设检查 (键为 预设名:指标), 是否同时评估各预设自身的检查
REPRODUCTIONS: dict[str, dict] = {
    'table2': {
        'presets': ['table2-up', 'table2-gp'],
        'checks': [Check(kind='less', key='table2-gp:alpha.std', ref='table2-up:alpha.std')],
    },
    'table3': {
        'presets': ['table3-up', 'table3-gp'],
        'checks': [Check(kind='less', key='table3-gp:alpha.std', ref='table3-up:alpha.std')],
    },
    'table4': {'presets': ['table4-d1-up', 'table4-d1-gp', 'table4-r4-up', 'table4-r4-gp'], 'checks': []},
    'table5': {'presets': ['table5-d1-up', 'table5-d1-gp', 'table5-r4-up', 'table5-r4-gp'], 'checks': []},
    'fig5': {
        'presets': ['table2-up'],
        'checks': [
            Check(kind='range', key='table2-up:running.width_ratio', hi=0.5),
            Check(kind='true', key='table2-up:running.all_contain_truth'),
        ],
        'preset_checks': False,
    },
    'fig14': {'presets': ['fig14-alpha1', 'fig14-alpha0.1', 'fig14-alpha0.01'], 'checks': []},
}


def get_preset(name: str) -> ExperimentConfig:
    if name not in PRESETS:
        raise ConfigError(f'未知的预设 {name}, 可选: {", ".join(PRESETS)}')
    return PRESETS[name].model_copy(deep=True)
