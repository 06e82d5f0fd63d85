# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/cli/experiments.py
# Description: 子命令实现: 生成观测, 采样, 剖面扫描, 重算统计与批量复现

import json
import warnings
from pathlib import Path

import numpy as np
from loguru import logger

from ..bayes import Observation, PDEForwardModel, Posterior, make_observation, profile_scan, quadrature_moments
from ..bayes import identifiability_verdict
from ..mcmc import Chain, run_chain
from ..mesh import Mesh, build_unit_square_mesh
from ..solver import BranchMismatchWarning, SolveReport, solve_branch
from ..stats import (InsufficientLength, KSResult, ChainStats, bivariate_histogram, central_interval, chain_stats,
                     default_checkpoints, discard_burn_in, histogram, ks_stationarity, running_stats,
                     write_histogram, write_histogram2d, write_ks_table, write_running_stats, write_stats)
from .config import ExperimentConfig, derive_seed, save_config
from .presets import REPRODUCTIONS, get_preset
from .report import comparison_rows, evaluate_check, provenance, render_table, write_comparison
from .types import ConfigError, GenerationFailure, MeshMismatch, ReproductionFailure


def _run_dir(config: ExperimentConfig, out: str | Path | None) -> Path:
    run_dir = Path(out) / config.name if out is not None else config.run_dir
    run_dir.mkdir(parents=True, exist_ok=True)
    return run_dir


def _write_json(data: dict, path: Path) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, ensure_ascii=False, indent=2)


def generate_observation(config: ExperimentConfig, mesh: Mesh | None = None) -> tuple[Observation, SolveReport]:
    """ 在 (α*, β*) 处求解正问题并构造合成观测

    Args:
        config (ExperimentConfig): 实验配置
        mesh (Mesh, optional): 反演网格, 默认按 mesh_n 构造. Defaults to None.

    Raises:
        GenerationFailure: 所得解不属于命名初值预期的分支

    Returns:
        tuple[Observation, SolveReport]: 观测与求解报告
    """
    mesh = mesh or build_unit_square_mesh(config.mesh_n)
    obs_n = config.observation_mesh_n or config.mesh_n
    obs_mesh = mesh if obs_n == config.mesh_n else build_unit_square_mesh(obs_n)
    bc = config.bc.build()
    logger.info(f'[{config.name}] 生成观测: {config.branch.value}, alpha*={config.alpha_star}, '
                f'beta*={config.beta_star}, n={obs_n}')
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', BranchMismatchWarning)
        report = solve_branch(config.branch, config.alpha_star, config.beta_star, obs_mesh, bc, config.solver)
    if report.branch_mismatch:
        raise GenerationFailure(f'{config.branch.value} 初值收敛到 {report.branch.value} 分支, 观测被拒绝')
    obs = make_observation(report, {
        'alpha_star': config.alpha_star,
        'beta_star': config.beta_star,
        'branch': config.branch.value,
        'classified': report.branch.value,
        'mesh_n': config.mesh_n,
        'observation_mesh_n': obs_n,
        'bc': config.bc.build().to_dict(),
        **provenance(config),
    }, mesh)
    return obs, report


def cmd_generate(config: ExperimentConfig, out: str | Path | None = None) -> Observation:
    """ generate 子命令: 写出 observation.csv, observation.json 与 solve_report.json
    """
    run_dir = _run_dir(config, out)
    obs, report = generate_observation(config)
    obs.dump(run_dir / 'observation.csv', run_dir / 'observation.json')
    report.dump(run_dir / 'solve_report.json')
    save_config(config, run_dir / 'config.json5')
    logger.success(f'[{config.name}] 观测已写入 {run_dir}, 分支 {report.branch.value}, {report.iterations} 次牛顿迭代')
    return obs


def load_observation(config: ExperimentConfig, run_dir: Path, mesh: Mesh) -> Observation:
    """ 读取运行目录中的观测, 不存在时先生成

    Raises:
        MeshMismatch: 观测与网格不一致
    """
    csv_path = run_dir / 'observation.csv'
    if not csv_path.exists():
        obs, report = generate_observation(config, mesh)
        obs.dump(csv_path, run_dir / 'observation.json')
        report.dump(run_dir / 'solve_report.json')
        return obs
    try:
        return Observation.load(csv_path, run_dir / 'observation.json', mesh)
    except ValueError as e:
        raise MeshMismatch(f'观测 {csv_path} 与 n={config.mesh_n} 的网格不一致: {e}') from e


def _ks_tables(segment: np.ndarray, names: tuple[str, ...], config: ExperimentConfig) -> dict[str, list[KSResult]]:
    tables = {}
    for k, name in enumerate(names):
        try:
            tables[name] = ks_stationarity(segment[:, k], config.ks_period, config.ks_step, config.ks_alpha)
        except InsufficientLength as e:
            logger.warning(f'[{config.name}] 跳过 {name} 的 KS 检验: {e}')
    return tables


def analyse_chain(chain: Chain, config: ExperimentConfig, run_dir: Path, extra: dict | None = None) -> dict:
    """ 对链做预烧期之后的全部统计并写出产物

    产物: stats.json, ks.csv, hist_<坐标>.csv, 二元时 hist2d.csv, running_stats.csv.

    Returns:
        dict: 扁平的指标字典, 供复现检查使用
    """
    stats: ChainStats = chain_stats(chain, config.burn_in, config.k_max, config.level)
    segment = discard_burn_in(chain, config.burn_in)
    names = chain.names
    truth = config.truth

    ks = _ks_tables(segment, names, config)
    write_ks_table(ks, run_dir / 'ks.csv')
    for k, name in enumerate(names):
        write_histogram(histogram(segment[:, k], config.bins), run_dir / f'hist_{name}.csv')
    if chain.dim == 2:
        write_histogram2d(bivariate_histogram(segment, config.bins), run_dir / 'hist2d.csv')

    checkpoints = ([c for c in config.checkpoints or [] if c <= len(segment)]
                   or default_checkpoints(len(segment)))
    running = running_stats(segment[:, 0], checkpoints, config.k_max, config.level)
    write_running_stats(running, run_dir / 'running_stats.csv')

    metrics = {'acceptance_rate': chain.acceptance_rate, 'n_used': stats.n_used}
    if stats.correlation is not None:
        metrics['correlation'] = stats.correlation
    for k, name in enumerate(names):
        lo, hi = stats.ci[k]
        c_lo, c_hi = central_interval(segment[:, k], config.level)
        metrics |= {
            f'{name}.mean': float(stats.mean[k]),
            f'{name}.median': float(stats.median[k]),
            f'{name}.std': float(stats.std[k]),
            f'{name}.gamma_sq': float(stats.gamma_sq[k]),
            f'{name}.ci_width': float(hi - lo),
            f'{name}.ci_contains_truth': bool(lo <= truth[k] <= hi),
            f'{name}.central_contains_truth': bool(c_lo <= truth[k] <= c_hi),
        }
        if name in ks:
            metrics[f'{name}.ks_fail_fraction'] = sum(not r.passed for r in ks[name]) / len(ks[name])
    base = next((r for r in running if r.n >= 1000), running[0])
    metrics['running.width_ratio'] = running[-1].width / base.width if base.width > 0 else float('nan')
    metrics['running.all_contain_truth'] = all(r.ci[0] <= truth[0] <= r.ci[1] for r in running)

    write_stats(stats, run_dir / 'stats.json', {
        'truth': dict(zip(names, truth)),
        'burn_in': config.burn_in,
        'metrics': metrics,
        **(extra or {}),
        'provenance': provenance(config),
    })
    return metrics


def cmd_sample(config: ExperimentConfig, out: str | Path | None = None, progress: bool = True) -> dict:
    """ sample 子命令: 对观测运行 Metropolis-Hastings 并写出链与统计产物

    Args:
        config (ExperimentConfig): 实验配置
        out (str | Path, optional): 输出根目录, 默认取配置中的 out_dir. Defaults to None.
        progress (bool, optional): 显示进度条. Defaults to True.

    Raises:
        MeshMismatch: 已有观测与网格不一致
        InvalidInit: 初值处后验为 0

    Returns:
        dict: 指标字典
    """
    run_dir = _run_dir(config, out)
    mesh = build_unit_square_mesh(config.mesh_n)
    bc = config.bc.build()
    obs = load_observation(config, run_dir, mesh)
    forward = PDEForwardModel(mesh, bc, obs, config.solver)
    posterior = Posterior(config.prior.build(config.truth), obs, forward,
                          beta=config.beta_star if config.estimate == 'alpha' else None)
    seed = derive_seed(config.seed, f'{config.name}/sample')
    logger.info(f'[{config.name}] MCMC: {config.chain_length} 步, 提议 {config.proposal.kind}, 种子 {seed}')
    chain = run_chain(posterior, config.init, config.chain_length, config.proposal.build(), seed,
                      on_accept=posterior.accept, progress=progress, description=config.name)
    chain.extra['forward'] = forward.diagnostics()
    chain.extra['prior'] = posterior.prior.to_dict()
    chain.dump(run_dir / 'chain.csv', run_dir / 'chain.json')
    save_config(config, run_dir / 'config.json5')
    metrics = analyse_chain(chain, config, run_dir, {'forward': forward.diagnostics(),
                                                     'prior': posterior.prior.to_dict()})
    logger.success(f'[{config.name}] 采样完成, 接受率 {chain.acceptance_rate:.2%}, '
                   f'正问题失败 {forward.n_failures}/{forward.n_solves}')
    return metrics


def cmd_profile(config: ExperimentConfig, out: str | Path | None = None, progress: bool = True) -> dict:
    """ profile 子命令: 一维 α 网格上的归一化似然, 平坦度与可辨识性判断

    同一网格上再做一次梯形求积, 给出后验均值与中位数作为 MCMC 的对照.

    Raises:
        ConfigError: 配置中没有 profile 网格

    Returns:
        dict: 指标字典 (profile.flatness, quadrature.mean 等)
    """
    if config.profile is None:
        raise ConfigError(f'配置 {config.name} 缺少 profile 网格')
    run_dir = _run_dir(config, out)
    mesh = build_unit_square_mesh(config.mesh_n)
    obs = load_observation(config, run_dir, mesh)
    forward = PDEForwardModel(mesh, config.bc.build(), obs, config.solver)
    grid = config.profile.grid()
    beta = config.beta_star

    curve = profile_scan(obs, grid, forward, beta=beta, progress=progress)
    curve.dump(run_dir / 'profile.csv')
    verdict = identifiability_verdict(curve.flatness, config.profile.plateau, config.profile.peaked,
                                      tail=curve.tail_mass, fat_tail=config.profile.fat_tail)
    metrics = {'profile.flatness': curve.flatness, 'profile.tail_mass': curve.tail_mass,
               'profile.peak': float(curve.peak), 'profile.verdict': verdict}

    if config.dim == 1 and np.isfinite(curve.flatness) and len(grid) >= 3:
        forward.reset()
        moments = quadrature_moments(config.prior.build(config.truth), obs, grid, forward,
                                     beta=beta, progress=progress)
        metrics |= {'quadrature.mean': float(moments.mean[0]), 'quadrature.median': float(moments.median[0]),
                    'quadrature.escaped_fraction': moments.escaped_fraction}

    _write_json({**metrics, 'grid': {'lo': config.profile.lo, 'hi': config.profile.hi,
                                     'points': config.profile.points},
                 'forward': forward.diagnostics(), 'provenance': provenance(config)},
                run_dir / 'profile.json')
    logger.success(f'[{config.name}] 剖面扫描: 平坦度 {curve.flatness:.4g}, 判断 {verdict}')
    return metrics


def cmd_stats(config: ExperimentConfig, chain_path: str | Path | None = None, out: str | Path | None = None) -> dict:
    """ stats 子命令: 由已保存的链重算统计量

    Args:
        config (ExperimentConfig): 实验配置 (预烧期, 置信水平, KS 设置)
        chain_path (str | Path, optional): 链 CSV, 默认取运行目录中的 chain.csv. Defaults to None.
        out (str | Path, optional): 输出根目录. Defaults to None.

    Raises:
        ConfigError: 链文件不存在

    Returns:
        dict: 指标字典
    """
    run_dir = _run_dir(config, out)
    chain_path = Path(chain_path) if chain_path else run_dir / 'chain.csv'
    json_path = chain_path.with_suffix('.json')
    if not chain_path.exists() or not json_path.exists():
        raise ConfigError(f'找不到链文件 {chain_path} 或 {json_path}')
    chain = Chain.load(chain_path, json_path)
    if chain.dim != config.dim:
        raise ConfigError(f'链维数 {chain.dim} 与配置的待估参数维数 {config.dim} 不一致')
    metrics = analyse_chain(chain, config, run_dir, {'chain': str(chain_path)})
    logger.success(f'[{config.name}] 统计量已由 {chain_path} 重算')
    return metrics


def run_experiment(config: ExperimentConfig, out: str | Path | None = None, progress: bool = True) -> dict:
    """ 生成观测, 采样, 有 profile 网格时再做剖面扫描
    """
    cmd_generate(config, out)
    metrics = cmd_sample(config, out, progress)
    if config.profile is not None:
        metrics |= cmd_profile(config, out, progress)
    return metrics


def cmd_reproduce(table_id: str,
                  out: str | Path | None = None,
                  seed: int | None = None,
                  progress: bool = True) -> dict:
    """ reproduce 子命令: 按内置预设跑完整流程并与发表的数值对照

    Args:
        table_id (str): 复现编号 (table2..table5, fig5, fig14)
        out (str | Path, optional): 输出根目录, 默认 runs. Defaults to None.
        seed (int, optional): 覆盖预设的根种子. Defaults to None.
        progress (bool, optional): 显示进度条. Defaults to True.

    Raises:
        ConfigError: 未知的复现编号
        ReproductionFailure: 有检查未通过 (所有预设都跑完后汇总)

    Returns:
        dict: comparison.json 的内容
    """
    if table_id not in REPRODUCTIONS:
        raise ConfigError(f'未知的复现编号 {table_id}, 可选: {", ".join(REPRODUCTIONS)}')
    spec = REPRODUCTIONS[table_id]
    root = Path(out) if out is not None else Path('runs')
    bundle_dir = root / table_id
    bundle_dir.mkdir(parents=True, exist_ok=True)

    metrics, rows, checks, configs = {}, [], [], {}
    for name in spec['presets']:
        config = get_preset(name)
        if seed is not None:
            config = config.model_copy(update={'seed': seed})
        configs[name] = config
        logger.info(f'[{table_id}] 运行预设 {name}')
        result = run_experiment(config, bundle_dir, progress)
        metrics |= {f'{name}:{k}': v for k, v in result.items()}
        rows += comparison_rows(name, config.published, metrics)
        if spec.get('preset_checks', True):
            for check in config.checks:
                ok, desc = evaluate_check(check, metrics, prefix=f'{name}:')
                checks.append({'preset': name, 'passed': ok, 'check': desc})

    for check in spec['checks']:
        ok, desc = evaluate_check(check, metrics)
        checks.append({'preset': None, 'passed': ok, 'check': desc})

    if rows:
        print(render_table(rows))
    print(render_table([{'passed': c['passed'], 'check': c['check']} for c in checks]))

    info = {
        'metrics': metrics,
        'provenance': {name: provenance(c) for name, c in configs.items()},
        'assumptions': ['高斯先验以真值 (α*, β*) 为中心'],
    }
    write_comparison(bundle_dir / 'comparison.json', table_id, rows, checks, info)

    failures = [c['check'] for c in checks if not c['passed']]
    if failures:
        for f in failures:
            logger.error(f'[{table_id}] 未通过: {f}')
        raise ReproductionFailure(failures)
    logger.success(f'[{table_id}] 全部 {len(checks)} 项检查通过')
    return {'reproduction': table_id, 'rows': rows, 'checks': checks, **info}
