# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/cli/__init__.py
# Description: 命令行入口

import argparse
from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from ..bayes import DegenerateObservation
from ..log import set_logger
from ..mcmc import InvalidInit
from ..solver import SolverError
from ..stats import InsufficientLength
from .config import (BCConfig, Check, ExperimentConfig, PriorConfig, ProfileConfig, ProposalSpec, config_hash,
                     derive_seed, emit_config, load_config, parse_config, save_config)
from .experiments import (analyse_chain, cmd_generate, cmd_profile, cmd_reproduce, cmd_sample, cmd_stats,
                          generate_observation, load_observation, run_experiment)
from .presets import PRESETS, REPRODUCTIONS, get_preset
from .report import evaluate_check, provenance
from .types import ConfigError, ExitCode, GenerationFailure, MeshMismatch, ReproductionFailure

_VALIDATION_ERRORS = (ValidationError, ConfigError, MeshMismatch, InvalidInit, InsufficientLength,
                      DegenerateObservation)
_SOLVER_ERRORS = (SolverError, GenerationFailure)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='ldg-inverse',
                                     description='约化 Landau-de Gennes 模型参数 (α, β) 的贝叶斯反演')
    sub = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=Path, help='JSON5 实验配置文件')
    common.add_argument('--preset', help=f'内置预设: {", ".join(PRESETS)}')
    common.add_argument('--seed', type=int, help='覆盖根种子')
    common.add_argument('--out', type=Path, help='输出根目录')
    common.add_argument('--log-level', default='INFO', help='日志级别')
    common.add_argument('--no-progress', action='store_true', help='不显示进度条')

    sub.add_parser('generate', parents=[common], help='生成合成观测')
    sub.add_parser('sample', parents=[common], help='运行 MCMC 并统计')
    sub.add_parser('profile', parents=[common], help='似然剖面扫描')
    stats = sub.add_parser('stats', parents=[common], help='由已保存的链重算统计量')
    stats.add_argument('--chain', type=Path, help='链 CSV, 默认取运行目录中的 chain.csv')
    reproduce = sub.add_parser('reproduce', parents=[common], help='按内置预设复现发表的结果')
    reproduce.add_argument('table_id', choices=list(REPRODUCTIONS), help='复现编号')
    return parser


def _resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    if args.config is not None and args.preset is not None:
        raise ConfigError('--config 与 --preset 只能给出一个')
    if args.config is not None:
        config = load_config(args.config)
    elif args.preset is not None:
        config = get_preset(args.preset)
    else:
        raise ConfigError('需要 --config 或 --preset')
    if args.seed is not None:
        config = config.model_copy(update={'seed': args.seed})
    return config


def _run(args: argparse.Namespace) -> None:
    progress = not args.no_progress
    if args.command == 'reproduce':
        log_dir = (args.out or Path('runs')) / args.table_id
        log_dir.mkdir(parents=True, exist_ok=True)
        set_logger(console=True, file=True, level=args.log_level, file_path=log_dir / 'run.log')
        cmd_reproduce(args.table_id, args.out, args.seed, progress)
        return

    config = _resolve_config(args)
    run_dir = (args.out / config.name) if args.out is not None else config.run_dir
    run_dir.mkdir(parents=True, exist_ok=True)
    set_logger(console=True, file=True, level=args.log_level, file_path=run_dir / 'run.log')
    match args.command:
        case 'generate':
            cmd_generate(config, args.out)
        case 'sample':
            cmd_sample(config, args.out, progress)
        case 'profile':
            cmd_profile(config, args.out, progress)
        case 'stats':
            cmd_stats(config, args.chain, args.out)


def main(argv: list[str] | None = None) -> int:
    """ 命令行入口, 返回退出码: 0 成功, 2 输入不合法, 3 求解失败, 4 复现超出容差
    """
    args = build_parser().parse_args(argv)
    try:
        _run(args)
    except _VALIDATION_ERRORS as e:
        logger.error(f'输入不合法: {e}')
        return ExitCode.VALIDATION
    except _SOLVER_ERRORS as e:
        logger.error(f'求解失败: {e}')
        return ExitCode.SOLVER
    except ReproductionFailure as e:
        logger.error(f'复现未通过: {e}')
        return ExitCode.REPRODUCTION
    return ExitCode.SUCCESS
