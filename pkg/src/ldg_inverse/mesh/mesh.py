# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mesh/mesh.py
# Description: 单位正方形结构网格

import numpy as np

from .types import Mesh


def build_unit_square_mesh(n: int) -> Mesh:
    """ 构造 n×n 单元的结构网格, 每个单元沿左下到右上的对角线分成两个直角三角形

    节点按 (y, x) 字典序编号: 节点 (i, j) 的编号为 j*(n+1)+i, 坐标 (i/n, j/n).

    Args:
        n (int): 每边剖分数

    Raises:
        ValueError: n < 2

    Returns:
        Mesh: 网格, h = √2/n
    """
    if n < 2:
        raise ValueError(f'每边剖分数至少为 2, 实际为 {n}')
    t = np.linspace(0.0, 1.0, n + 1)
    xx, yy = np.meshgrid(t, t)
    nodes = np.column_stack([xx.ravel(), yy.ravel()])

    j, i = np.meshgrid(np.arange(n), np.arange(n), indexing='ij')
    v00 = (j * (n + 1) + i).ravel()
    v10 = v00 + 1
    v01 = v00 + n + 1
    v11 = v01 + 1
    lower = np.column_stack([v00, v10, v11])
    upper = np.column_stack([v00, v11, v01])
    triangles = np.stack([lower, upper], axis=1).reshape(-1, 3)
    return Mesh(nodes, triangles, n)


def restrict_to(mesh_fine: Mesh, mesh_coarse: Mesh, values: np.ndarray) -> np.ndarray:
    """ 将细网格上的节点值注入到粗网格 (粗网格节点是细网格节点的子集)

    Args:
        mesh_fine (Mesh): 细结构网格
        mesh_coarse (Mesh): 粗结构网格
        values (np.ndarray): 细网格节点值, 首维长度为细网格节点数

    Raises:
        ValueError: 非结构网格或细网格剖分数不是粗网格的整数倍

    Returns:
        np.ndarray: 粗网格节点值
    """
    if mesh_fine.n is None or mesh_coarse.n is None:
        raise ValueError('节点注入只支持结构网格')
    if mesh_fine.n % mesh_coarse.n:
        raise ValueError(f'细网格剖分数 {mesh_fine.n} 不是粗网格剖分数 {mesh_coarse.n} 的整数倍')
    values = np.asarray(values)
    if len(values) != mesh_fine.n_nodes:
        raise ValueError(f'节点值长度 {len(values)} 与细网格节点数 {mesh_fine.n_nodes} 不一致')
    r = mesh_fine.n // mesh_coarse.n
    j, i = np.meshgrid(np.arange(mesh_coarse.n + 1), np.arange(mesh_coarse.n + 1), indexing='ij')
    index = (j * r * (mesh_fine.n + 1) + i * r).ravel()
    return values[index].copy()
