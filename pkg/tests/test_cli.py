# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: tests/test_cli.py
# Description: 配置, 预设, 复现检查与命令行端到端流程

import json

import numpy as np
import pytest
from loguru import logger
from pydantic import ValidationError

from ldg_inverse.bayes import GaussianTruncated
from ldg_inverse.cli import (PRESETS, REPRODUCTIONS, Check, ConfigError, ExitCode, ExperimentConfig, PriorConfig,
                             build_parser, config_hash, derive_seed, emit_config, evaluate_check, get_preset, main,
                             parse_config)
from ldg_inverse.cli.report import comparison_rows, write_comparison
from ldg_inverse.log import set_logger

VORTEX_CONFIG = """
// 小网格上的点涡观测, 能跑完整流程即可
{
  name: 'vortex-small',
  mesh_n: 4,
  bc: {kind: 'vortex', center: [0.25, 0.75]},
  branch: 'VORTEX',
  alpha_star: 1.0,
  beta_star: 1.0,
  estimate: 'alpha',
  prior: {kind: 'uniform'},
  proposal: {kind: 'univariate', sigma: [0.25]},
  init: [1.25],
  chain_length: 300,
  burn_in: 100,
  seed: 7,
  profile: {lo: 0.5, hi: 2.0, points: 5},
}
"""


def minimal(**update) -> dict:
    data = {'name': 'unit', 'alpha_star': 0.004}
    data.update(update)
    return data


def write_config(tmp_path, text: str = VORTEX_CONFIG, name: str = 'config.json5'):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return path


class TestConfig:
    def test_defaults(self):
        config = ExperimentConfig.model_validate(minimal())
        assert config.dim == 1
        assert config.truth == [0.004]
        assert config.mesh_n == 32
        assert config.burn_in == 200

    def test_json5_round_trip(self):
        config = parse_config(VORTEX_CONFIG)
        assert config.bc.kind == 'vortex'
        assert config.profile.grid().tolist() == [0.5, 0.875, 1.25, 1.625, 2.0]
        assert parse_config(emit_config(config)) == config

    def test_invalid_json5(self):
        with pytest.raises(ConfigError):
            parse_config('{name: ')

    @pytest.mark.parametrize('update', [
        {'unknown': 1},
        {'alpha_star': 0.0},
        {'chain_length': 250},
        {'init': [0.005, 0.6]},
        {'estimate': 'alpha_beta', 'init': [0.005, 0.6]},
        {'observation_mesh_n': 48},
        {'level': 0.8},
        {'ks_alpha': 0.2},
        {'proposal': {'kind': 'bivariate', 'sigma': [0.001]}},
        {'profile': {'lo': 2.0, 'hi': 1.0}},
    ])
    def test_validation(self, update):
        with pytest.raises(ValidationError):
            ExperimentConfig.model_validate(minimal(**update))

    def test_config_hash(self):
        config = ExperimentConfig.model_validate(minimal())
        assert config_hash(config) == config_hash(config.model_copy(deep=True))
        assert config_hash(config) != config_hash(config.model_copy(update={'seed': 1}))

    def test_derive_seed(self):
        assert derive_seed(1, 'a/sample') == derive_seed(1, 'a/sample')
        assert derive_seed(1, 'a/sample') != derive_seed(1, 'b/sample')
        assert derive_seed(1, 'a/sample') != derive_seed(2, 'a/sample')

    def test_prior_centred_on_truth(self):
        prior = PriorConfig(kind='gaussian', sigma=[0.0005]).build([0.004])
        assert isinstance(prior, GaussianTruncated)
        assert prior.to_dict()['center'] == [0.004]
        with pytest.raises(ConfigError):
            PriorConfig(kind='gaussian').build([0.004])


class TestPresets:
    def test_reproductions_refer_to_presets(self):
        for spec in REPRODUCTIONS.values():
            assert all(name in PRESETS for name in spec['presets'])

    def test_published_values(self):
        assert PRESETS['table2-up'].published['alpha.mean'] == 0.0040195
        assert PRESETS['table5-r4-gp'].published['correlation'] == 0.4865024
        table4 = PRESETS['table4-d1-up']
        assert table4.truth == [0.004, 0.6]
        assert table4.proposal.build().to_dict()['rho'] == 0.8

    @pytest.mark.parametrize('name,verdict', [('fig14-alpha1', 'plateau'), ('fig14-alpha0.1', 'fat-tail'),
                                              ('fig14-alpha0.01', 'peaked')])
    def test_vortex_verdict_checks(self, name, verdict):
        checks = [c for c in PRESETS[name].checks if c.kind == 'equals']
        assert [(c.key, c.value) for c in checks] == [('profile.verdict', verdict)]

    def test_get_preset_returns_copy(self):
        config = get_preset('table2-up')
        config.published['alpha.mean'] = 1.0
        assert PRESETS['table2-up'].published['alpha.mean'] == 0.0040195

    def test_unknown_preset(self):
        with pytest.raises(ConfigError):
            get_preset('table9')


class TestChecks:
    METRICS = {'a:alpha.mean': 0.0041, 'b:alpha.std': 0.0002, 'a:alpha.std': 0.0004, 'a:flag': True,
               'a:correlation': 0.85, 'a:profile.verdict': 'fat-tail'}

    @pytest.mark.parametrize('check,expected', [
        (Check(kind='rel_error', key='alpha.mean', target=0.004, tol=0.10), True),
        (Check(kind='rel_error', key='alpha.mean', target=0.004, tol=0.01), False),
        (Check(kind='bias_rel', key='alpha.mean', target=0.004, tol=0.30), True),
        (Check(kind='bias_rel', key='alpha.mean', target=0.005, tol=0.30), False),
        (Check(kind='abs_error', key='alpha.mean', target=0.004, tol=0.001), True),
        (Check(kind='range', key='correlation', lo=0.6), True),
        (Check(kind='range', key='correlation', lo=0.3, hi=0.7), False),
        (Check(kind='true', key='flag'), True),
        (Check(kind='true', key='missing'), False),
        (Check(kind='equals', key='profile.verdict', value='fat-tail'), True),
        (Check(kind='equals', key='profile.verdict', value='peaked'), False),
        (Check(kind='any', children=[Check(kind='true', key='missing'), Check(kind='range', key='correlation', lo=0.8)]), True),
    ])
    def test_prefixed(self, check, expected):
        ok, desc = evaluate_check(check, self.METRICS, prefix='a:')
        assert ok is expected
        assert desc

    def test_less_across_presets(self):
        assert evaluate_check(Check(kind='less', key='b:alpha.std', ref='a:alpha.std'), self.METRICS)[0]
        assert not evaluate_check(Check(kind='less', key='a:alpha.std', ref='b:alpha.std'), self.METRICS)[0]
        ok, desc = evaluate_check(Check(kind='less', key='b:alpha.std', ref='c:alpha.std'), self.METRICS)
        assert not ok and '缺少' in desc

    def test_comparison_file(self, tmp_path):
        rows = comparison_rows('a', {'alpha.mean': 0.0040195, 'beta.mean': 0.6}, self.METRICS)
        assert rows[0]['reproduced'] == 0.0041
        assert rows[1]['reproduced'] is None
        write_comparison(tmp_path / 'comparison.json', 'table2', rows,
                         [{'preset': 'a', 'passed': True, 'check': 'x'}], {'metrics': {}})
        data = json.loads((tmp_path / 'comparison.json').read_text(encoding='utf-8'))
        assert data['passed'] is True
        assert data['reproduction'] == 'table2'


class TestLogger:
    def test_file_level(self, tmp_path):
        set_logger(console=False, file=True, level='WARNING', file_level='DEBUG', file_path=str(tmp_path / 'run.log'))
        logger.debug('newton step')
        logger.trace('hidden')
        logger.remove()
        text = (tmp_path / 'run.log').read_text(encoding='utf-8')
        assert 'newton step' in text
        assert 'hidden' not in text
        assert 'test_cli:test_file_level' in text


class TestParser:
    def test_reproduce_choices(self):
        args = build_parser().parse_args(['reproduce', 'table2', '--seed', '3', '--no-progress'])
        assert args.table_id == 'table2' and args.seed == 3 and args.no_progress
        with pytest.raises(SystemExit):
            build_parser().parse_args(['reproduce', 'table9'])

    def test_stats_chain_option(self, tmp_path):
        args = build_parser().parse_args(['stats', '--preset', 'table2-up', '--chain', str(tmp_path / 'c.csv')])
        assert args.chain == tmp_path / 'c.csv'


class TestEndToEnd:
    @pytest.fixture(scope='class')
    def run(self, tmp_path_factory):
        root = tmp_path_factory.mktemp('cli')
        config = write_config(root)
        out = root / 'runs'
        codes = [main([command, '--config', str(config), '--out', str(out), '--no-progress'])
                 for command in ('generate', 'sample', 'profile', 'stats')]
        return root, config, out / 'vortex-small', codes

    def test_exit_codes(self, run):
        *_, codes = run
        assert codes == [ExitCode.SUCCESS] * 4

    def test_artifacts(self, run):
        _, _, run_dir, _ = run
        for name in ('observation.csv', 'observation.json', 'solve_report.json', 'config.json5', 'chain.csv',
                     'chain.json', 'stats.json', 'ks.csv', 'hist_alpha.csv', 'running_stats.csv', 'profile.csv',
                     'profile.json', 'run.log'):
            assert (run_dir / name).exists(), name
        assert len((run_dir / 'chain.csv').read_text().splitlines()) == 301

    def test_stats_json(self, run):
        _, _, run_dir, _ = run
        data = json.loads((run_dir / 'stats.json').read_text(encoding='utf-8'))
        assert data['n_used'] == 200
        assert data['truth'] == {'alpha': 1.0}
        assert data['provenance']['seed'] == 7
        assert 0.0 <= data['metrics']['acceptance_rate'] <= 1.0
        assert 'alpha.ks_fail_fraction' not in data['metrics']
        assert np.isfinite(data['alpha']['mean'])

    def test_observation_provenance(self, run):
        _, _, run_dir, _ = run
        data = json.loads((run_dir / 'observation.json').read_text(encoding='utf-8'))
        assert data['branch'] == 'VORTEX'
        assert data['alpha_star'] == 1.0
        assert len(data['config_hash']) == 64

    def test_profile_json(self, run):
        _, _, run_dir, _ = run
        data = json.loads((run_dir / 'profile.json').read_text(encoding='utf-8'))
        assert data['profile.verdict'] in ('plateau', 'fat-tail', 'peaked')
        assert data['grid']['points'] == 5
        assert len((run_dir / 'profile.csv').read_text().splitlines()) == 6

    def test_byte_identical_rerun(self, run):
        root, config, run_dir, _ = run
        other = root / 'rerun'
        assert main(['sample', '--config', str(config), '--out', str(other), '--no-progress']) == ExitCode.SUCCESS
        assert (other / 'vortex-small' / 'chain.csv').read_bytes() == (run_dir / 'chain.csv').read_bytes()

    def test_mesh_mismatch(self, run, tmp_path):
        root, _, _, _ = run
        finer = write_config(tmp_path, VORTEX_CONFIG.replace('mesh_n: 4', 'mesh_n: 8'))
        code = main(['sample', '--config', str(finer), '--out', str(root / 'runs'), '--no-progress'])
        assert code == ExitCode.VALIDATION


class TestErrors:
    def test_invalid_config(self, tmp_path):
        path = write_config(tmp_path, VORTEX_CONFIG.replace('burn_in: 100', 'burn_in: 250'))
        assert main(['generate', '--config', str(path), '--out', str(tmp_path)]) == ExitCode.VALIDATION

    def test_missing_config(self, tmp_path):
        assert main(['generate', '--config', str(tmp_path / 'nope.json5'), '--out', str(tmp_path)]) == ExitCode.VALIDATION

    def test_config_and_preset(self, tmp_path):
        path = write_config(tmp_path)
        code = main(['generate', '--config', str(path), '--preset', 'table2-up', '--out', str(tmp_path)])
        assert code == ExitCode.VALIDATION

    def test_profile_requires_grid(self, tmp_path):
        text = VORTEX_CONFIG.replace("  profile: {lo: 0.5, hi: 2.0, points: 5},\n", '')
        path = write_config(tmp_path, text)
        assert main(['profile', '--config', str(path), '--out', str(tmp_path)]) == ExitCode.VALIDATION

    def test_stats_without_chain(self, tmp_path):
        path = write_config(tmp_path)
        assert main(['stats', '--config', str(path), '--out', str(tmp_path)]) == ExitCode.VALIDATION

    def test_branch_mismatch_is_a_solver_failure(self, tmp_path):
        text = ("{name: 'd1-large-alpha', mesh_n: 8, branch: 'D1', alpha_star: 1.0, beta_star: 1.0, "
                "init: [1.0], chain_length: 300, burn_in: 100}")
        path = write_config(tmp_path, text)
        assert main(['generate', '--config', str(path), '--out', str(tmp_path)]) == ExitCode.SOLVER
