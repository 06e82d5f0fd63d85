# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/cli/report.py
# Description: 指标收集, 容差检查与对照表

import json
from pathlib import Path

from tabulate import tabulate

from ..version import __version__
from .config import Check, ExperimentConfig, config_hash


def provenance(config: ExperimentConfig, **extra) -> dict:
    """ 附在每个 JSON 产物上的来源信息: 配置哈希, 根种子与软件版本
    """
    return {'config': config.name, 'config_hash': config_hash(config), 'seed': config.seed,
            'version': __version__, **extra}


def evaluate_check(check: Check, metrics: dict, prefix: str = '') -> tuple[bool, str]:
    """ 对一个检查求值

    Args:
        check (Check): 检查
        metrics (dict): 扁平的指标字典
        prefix (str, optional): 键前缀 (预设名:). Defaults to ''.

    Returns:
        tuple[bool, str]: (是否通过, 描述)
    """
    if check.kind == 'any':
        results = [evaluate_check(c, metrics, prefix) for c in check.children]
        return any(ok for ok, _ in results), ' or '.join(desc for _, desc in results)

    key = prefix + check.key
    if key not in metrics:
        return False, f'{key}: 缺少指标'
    v = metrics[key]
    match check.kind:
        case 'rel_error':
            err = abs(v - check.target) / abs(check.target)
            return err <= check.tol, f'{key}: |{v:.6g} - {check.target:.6g}| / {check.target:.6g} = {err:.3g} <= {check.tol}'
        case 'bias_rel':
            bias = (v - check.target) / check.target
            return 0 < bias <= check.tol, f'{key}: 0 < ({v:.6g} - {check.target:.6g}) / {check.target:.6g} = {bias:.3g} <= {check.tol}'
        case 'abs_error':
            err = abs(v - check.target)
            return err <= check.tol, f'{key}: |{v:.6g} - {check.target:.6g}| = {err:.3g} <= {check.tol}'
        case 'range':
            ok = (check.lo is None or v >= check.lo) and (check.hi is None or v <= check.hi)
            return ok, f'{key}: {v:.6g} in [{check.lo}, {check.hi}]'
        case 'true':
            return bool(v), f'{key}: {bool(v)}'
        case 'less':
            ref = prefix + check.ref
            if ref not in metrics:
                return False, f'{ref}: 缺少指标'
            return v < metrics[ref], f'{key} = {v:.6g} < {ref} = {metrics[ref]:.6g}'
        case 'equals':
            return v == check.value, f'{key}: {v} == {check.value}'
    raise ValueError(f'未知的检查类型: {check.kind}')


def comparison_rows(name: str, published: dict, metrics: dict) -> list[dict]:
    rows = []
    for key, value in published.items():
        rows.append({'preset': name, 'metric': key, 'published': value, 'reproduced': metrics.get(f'{name}:{key}')})
    return rows


def render_table(rows: list[dict], headers: str = 'keys') -> str:
    return tabulate(rows, headers=headers, floatfmt='.7g')


def write_comparison(path: str | Path, table_id: str, rows: list[dict], checks: list[dict], info: dict) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump({'reproduction': table_id, 'rows': rows, 'checks': checks,
                   'passed': all(c['passed'] for c in checks), **info},
                  f, ensure_ascii=False, indent=2)
