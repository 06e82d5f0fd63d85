# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mcmc/__init__.py
# Description: MCMC 接口

from .types import BivariateProposal, Chain, InvalidInit, ProposalConfig, UnivariateProposal
from .sampler import acceptance_rate, make_rng, run_chain
