# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: tests/test_mcmc.py
# Description: 提议分布与 Metropolis-Hastings 采样器

import numpy as np
import pytest

from ldg_inverse.mcmc import (BivariateProposal, Chain, InvalidInit, ProposalConfig, UnivariateProposal,
                              acceptance_rate, make_rng, run_chain)


def standard_normal(x):
    return float(-0.5 * x @ x)


def half_normal(x):
    return float(-0.5 * x @ x) if np.all(x > 0) else -np.inf


class TestProposals:
    def test_univariate(self):
        p = UnivariateProposal(0.001)
        assert p.draw(make_rng(1)).shape == (1,)
        np.testing.assert_array_equal(p.draw(make_rng(1)), p.draw(make_rng(1)))
        with pytest.raises(ValueError):
            UnivariateProposal(0.0)

    def test_bivariate_covariance(self):
        p = BivariateProposal(0.001, 0.1, 0.8)
        np.testing.assert_allclose(p.cholesky @ p.cholesky.T,
                                   [[1e-6, 0.8 * 1e-4], [0.8 * 1e-4, 1e-2]], rtol=1e-12)
        rng = make_rng(7)
        draws = np.array([p.draw(rng) for _ in range(20000)])
        assert np.corrcoef(draws.T)[0, 1] == pytest.approx(0.8, abs=0.02)
        assert draws[:, 1].std() == pytest.approx(0.1, rel=0.03)

    def test_bivariate_rejects_rho(self):
        with pytest.raises(ValueError):
            BivariateProposal(0.001, 0.1, -1.0)

    @pytest.mark.parametrize('proposal', [UnivariateProposal(0.25), BivariateProposal(0.005, 0.1, 0.8)])
    def test_dict_round_trip(self, proposal):
        assert ProposalConfig.from_dict(proposal.to_dict()) == proposal


class TestRunChain:
    def test_deterministic(self):
        a = run_chain(standard_normal, [0.5], 500, UnivariateProposal(1.0), 42)
        b = run_chain(standard_normal, [0.5], 500, UnivariateProposal(1.0), 42)
        np.testing.assert_array_equal(a.samples, b.samples)
        c = run_chain(standard_normal, [0.5], 500, UnivariateProposal(1.0), 43)
        assert not np.array_equal(a.samples, c.samples)

    def test_rejected_steps_repeat(self):
        chain = run_chain(standard_normal, [0.0], 1000, UnivariateProposal(3.0), 3)
        previous = np.vstack([chain.init, chain.samples[:-1]])
        rejected = ~chain.accepted
        assert rejected.any()
        np.testing.assert_array_equal(chain.samples[rejected], previous[rejected])
        assert np.all(np.any(chain.samples[chain.accepted] != previous[chain.accepted], axis=1))

    def test_on_accept_calls(self):
        calls = []
        chain = run_chain(standard_normal, [0.0], 300, UnivariateProposal(1.0), 5,
                          on_accept=lambda x, lp: calls.append(x))
        assert len(calls) == 1 + int(chain.accepted.sum())
        np.testing.assert_array_equal(calls[-1], chain.samples[np.flatnonzero(chain.accepted)[-1]])

    def test_support_is_respected(self):
        chain = run_chain(half_normal, [0.5], 2000, UnivariateProposal(1.0), 11)
        assert np.all(chain.samples > 0)

    def test_nan_target_is_rejected(self):
        def target(x):
            return float('nan') if x[0] > 1.0 else standard_normal(x)

        chain = run_chain(target, [0.0], 2000, UnivariateProposal(1.0), 13)
        assert np.all(chain.samples <= 1.0)

    def test_gaussian_moments(self):
        chain = run_chain(standard_normal, [0.0], 20000, UnivariateProposal(2.4), 2024)
        x = chain.samples[200:, 0]
        assert x.mean() == pytest.approx(0.0, abs=0.1)
        assert x.std() == pytest.approx(1.0, abs=0.1)
        assert 0.2 < chain.acceptance_rate < 0.7

    def test_correlated_gaussian_moments(self):
        cov = np.array([[1.0, 0.7], [0.7, 1.0]])
        precision = np.linalg.inv(cov)
        chain = run_chain(lambda x: float(-0.5 * x @ precision @ x), [0.0, 0.0], 40000,
                          BivariateProposal(1.7, 1.7, 0.7), 31)
        x = chain.samples[200:]
        np.testing.assert_allclose(x.mean(axis=0), [0.0, 0.0], atol=0.1)
        np.testing.assert_allclose(np.cov(x.T), cov, atol=0.1)
        assert 0.15 < chain.acceptance_rate < 0.7

    def test_bivariate_chain(self):
        chain = run_chain(standard_normal, [0.1, 0.2], 200, BivariateProposal(0.5, 0.5, 0.0), 9)
        assert chain.samples.shape == (200, 2)
        assert chain.names == ('alpha', 'beta')

    def test_invalid_init(self):
        with pytest.raises(InvalidInit):
            run_chain(half_normal, [-1.0], 10, UnivariateProposal(1.0), 1)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            run_chain(standard_normal, [0.0], 0, UnivariateProposal(1.0), 1)
        with pytest.raises(ValueError):
            run_chain(standard_normal, [0.0, 0.0], 10, UnivariateProposal(1.0), 1)


class TestChain:
    def test_acceptance_rate(self):
        chain = run_chain(standard_normal, [0.0], 400, UnivariateProposal(1.0), 17)
        assert acceptance_rate(chain) == pytest.approx(chain.accepted.mean())

    def test_empty_chain(self):
        chain = Chain(np.empty((0, 1)), np.empty(0, dtype=bool), np.empty(0), np.zeros(1), 0,
                      UnivariateProposal(1.0))
        with pytest.raises(ValueError):
            acceptance_rate(chain)

    def test_dump_load(self, tmp_path):
        chain = run_chain(standard_normal, [0.3], 100, UnivariateProposal(0.5), 21, description='normal')
        chain.dump(tmp_path / 'chain.csv', tmp_path / 'chain.json')
        lines = (tmp_path / 'chain.csv').read_text().splitlines()
        assert lines[0] == 'step,alpha,accepted,log_prob'
        assert lines[1].startswith('1,')
        loaded = Chain.load(tmp_path / 'chain.csv', tmp_path / 'chain.json')
        np.testing.assert_array_equal(loaded.samples, chain.samples)
        np.testing.assert_array_equal(loaded.accepted, chain.accepted)
        assert loaded.rng_seed == 21
        assert loaded.proposal == chain.proposal
        assert loaded.target == 'normal'

    def test_byte_identical_reruns(self, tmp_path):
        for name in ('a', 'b'):
            chain = run_chain(standard_normal, [0.1, 0.1], 300, BivariateProposal(0.3, 0.3, 0.8), 99)
            chain.dump(tmp_path / f'{name}.csv', tmp_path / f'{name}.json')
        assert (tmp_path / 'a.csv').read_bytes() == (tmp_path / 'b.csv').read_bytes()
