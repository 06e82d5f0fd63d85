# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/model/director.py
# Description: 指向矢与标量序参量

from typing import NamedTuple

import numpy as np

from ..mesh import Mesh
from .types import Director, QField

DEFECT_TOL = 1e-14


class DirectorField(NamedTuple):
    s: np.ndarray
    theta: np.ndarray
    defect: np.ndarray


def director_field(q: QField) -> DirectorField:
    """ 全部节点上的 s = |Q| 与 θ = ½ atan2(Q12, Q11) ∈ (-π/2, π/2]; s < 1e-14 处 θ 取 0 并标记为缺陷
    """
    s = np.hypot(q.q11, q.q12)
    defect = s < DEFECT_TOL
    theta = np.where(defect, 0.0, 0.5 * np.arctan2(q.q12, q.q11))
    return DirectorField(s, theta, defect)


def director(q: QField, node: int) -> Director:
    """ 单个节点的指向矢

    Args:
        q (QField): 场
        node (int): 节点编号

    Raises:
        IndexError: 节点编号越界

    Returns:
        Director: (s, theta, defect)
    """
    if not 0 <= node < q.mesh.n_nodes:
        raise IndexError(f'节点编号 {node} 越界')
    a, b = float(q.q11[node]), float(q.q12[node])
    s = float(np.hypot(a, b))
    if s < DEFECT_TOL:
        return Director(s, 0.0, True)
    return Director(s, 0.5 * float(np.arctan2(b, a)), False)


def qfield_from_director(mesh: Mesh, s, theta) -> QField:
    """ Q = (s cos2θ, s sin2θ)
    """
    s = np.broadcast_to(np.asarray(s, dtype=float), (mesh.n_nodes,))
    theta = np.broadcast_to(np.asarray(theta, dtype=float), (mesh.n_nodes,))
    return QField(mesh, s * np.cos(2 * theta), s * np.sin(2 * theta))
