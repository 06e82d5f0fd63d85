# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/bayes/__init__.py
# Description: 贝叶斯反问题接口

from .types import (DegenerateObservation, ErrorModel, MassEscapeWarning, Observation,
                    ProfileCurve, QuadratureMoments)
from .prior import BivariateGaussianTruncated, GaussianTruncated, Prior, UniformPositive, log_prior
from .forward import ForwardModel, PDEForwardModel
from .likelihood import Posterior, error_variances, log_likelihood, log_posterior
from .profile import identifiability_verdict, profile_scan, quadrature_moments, tail_mass
from .observation import make_observation
