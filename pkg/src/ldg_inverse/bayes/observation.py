# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/bayes/observation.py
# Description: 合成观测

from ..mesh import Mesh, restrict_to
from ..model import QField
from ..solver import SolveReport
from .types import Observation


def make_observation(report: SolveReport, provenance: dict | None = None, mesh: Mesh | None = None) -> Observation:
    """ 由正问题的解构造合成观测

    Args:
        report (SolveReport): 正问题求解报告
        provenance (dict, optional): 来源信息 (α*, β*, 分支, 网格, 种子). Defaults to None.
        mesh (Mesh, optional): 反演网格; 与解所在网格不同时做节点注入. Defaults to None.

    Returns:
        Observation: 观测
    """
    field = report.solution
    if mesh is not None and mesh is not field.mesh:
        field = QField(mesh,
                       restrict_to(field.mesh, mesh, field.q11),
                       restrict_to(field.mesh, mesh, field.q12))
    info = dict(provenance or {})
    info.setdefault('branch', report.branch.value if report.branch else None)
    info.setdefault('iterations', report.iterations)
    return Observation(field, info)
