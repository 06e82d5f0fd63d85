# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: tests/conftest.py
# Description: 共享夹具

import numpy as np
import pytest
from loguru import logger

from ldg_inverse.bayes import ForwardModel, Observation
from ldg_inverse.mesh import build_unit_square_mesh
from ldg_inverse.model import QField, TangentBC, VortexBC


@pytest.fixture(autouse=True)
def _quiet_logger():
    logger.remove()
    yield
    logger.remove()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope='session')
def mesh4():
    return build_unit_square_mesh(4)


@pytest.fixture(scope='session')
def mesh8():
    return build_unit_square_mesh(8)


@pytest.fixture
def tangent():
    return TangentBC(0.06)


@pytest.fixture
def vortex():
    return VortexBC(0.25, 0.75)


class LinearForward(ForwardModel):
    """ F(α, β) = (α u + β v, α v - β u) 的解析正问题, 用于不依赖 PDE 的贝叶斯测试
    """

    def __init__(self, u: np.ndarray, v: np.ndarray, fail_above: float | None = None) -> None:
        self.u = u
        self.v = v
        self.fail_above = fail_above
        self.calls = 0
        self.accepted = 0

    def solve(self, alpha: float, beta: float):
        self.calls += 1
        if self.fail_above is not None and alpha > self.fail_above:
            return None
        return alpha * self.u + beta * self.v, alpha * self.v - beta * self.u

    def accept(self) -> None:
        self.accepted += 1


@pytest.fixture
def linear_problem(mesh4):
    """ 真值 (α*, β*) = (0.5, 1.0) 处无噪声的线性观测
    """
    x, y = mesh4.nodes[:, 0], mesh4.nodes[:, 1]
    u = np.sin(np.pi * x) + y
    v = np.cos(np.pi * y) - x
    forward = LinearForward(u, v)
    q11, q12 = forward.solve(0.5, 1.0)
    forward.calls = 0
    obs = Observation(QField(mesh4, q11, q12), {'alpha_star': 0.5, 'beta_star': 1.0})
    return obs, forward
