# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mesh/boundary.py
# Description: 边界插值

import numpy as np

from .types import Mesh


def interpolate_boundary(mesh: Mesh, bc) -> np.ndarray:
    """ 在边界节点上对边界条件做节点插值 I_h Q_b

    Args:
        mesh (Mesh): 网格
        bc (BCSpec): 边界条件, 需提供 evaluate(points) -> (k, 2)

    Returns:
        np.ndarray: 形状 (len(boundary_nodes), 2), 行顺序与 mesh.boundary_nodes 一致
    """
    return np.asarray(bc.evaluate(mesh.nodes[mesh.boundary_nodes]), dtype=float)
