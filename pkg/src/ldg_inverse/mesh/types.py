# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mesh/types.py
# Description: 三角网格类型

from __future__ import annotations
import csv
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Mesh:
    """ [0,1]² 上的协调三角剖分, 构造后不可变

    nodes 形状 (N, 2), triangles 形状 (T, 3) 且逆时针定向;
    n 为结构网格每边的剖分数, 非结构网格为 None.
    """
    nodes: np.ndarray
    triangles: np.ndarray
    n: int | None = None

    def __post_init__(self) -> None:
        nodes = np.ascontiguousarray(self.nodes, dtype=float)
        triangles = np.ascontiguousarray(self.triangles, dtype=np.int64)
        if nodes.ndim != 2 or nodes.shape[1] != 2:
            raise ValueError(f'nodes 形状应为 (N, 2), 实际为 {nodes.shape}')
        if triangles.ndim != 2 or triangles.shape[1] != 3:
            raise ValueError(f'triangles 形状应为 (T, 3), 实际为 {triangles.shape}')
        if triangles.size and (triangles.min() < 0 or triangles.max() >= len(nodes)):
            raise ValueError('triangles 中存在越界的节点编号')
        nodes.flags.writeable = False
        triangles.flags.writeable = False
        object.__setattr__(self, 'nodes', nodes)
        object.__setattr__(self, 'triangles', triangles)
        if np.any(self.areas <= 0):
            bad = int(np.argmin(self.areas))
            raise ValueError(f'第 {bad} 个三角形面积非正: {self.areas[bad]}')

    @classmethod
    def from_arrays(cls, nodes, triangles) -> Mesh:
        """ 从任意节点与三角形数组构造网格, 并检查协调性

        Args:
            nodes (array_like): 节点坐标, 形状 (N, 2)
            triangles (array_like): 节点编号三元组, 形状 (T, 3)

        Raises:
            ValueError: 三角形面积非正或某条边被两个以上三角形共享

        Returns:
            Mesh: 网格
        """
        mesh = cls(np.asarray(nodes, dtype=float), np.asarray(triangles, dtype=np.int64))
        edges = np.sort(mesh.triangles[:, [0, 1, 1, 2, 2, 0]].reshape(-1, 2), axis=1)
        _, counts = np.unique(edges, axis=0, return_counts=True)
        if np.any(counts > 2):
            raise ValueError('三角剖分不协调: 存在被两个以上三角形共享的边')
        return mesh

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    @cached_property
    def jacobians(self) -> np.ndarray:
        """ 仿射映射 J = [[x1-x0, x2-x0], [y1-y0, y2-y0]], 形状 (T, 2, 2)
        """
        p = self.nodes[self.triangles]
        return np.stack([p[:, 1] - p[:, 0], p[:, 2] - p[:, 0]], axis=2)

    @cached_property
    def areas(self) -> np.ndarray:
        return 0.5 * np.linalg.det(self.jacobians)

    @cached_property
    def gradients(self) -> np.ndarray:
        """ P1 基函数梯度, 形状 (T, 3, 2), 单元内为常数
        """
        inv = np.linalg.inv(self.jacobians)
        grads = np.empty((self.n_triangles, 3, 2))
        grads[:, 1] = inv[:, 0]
        grads[:, 2] = inv[:, 1]
        grads[:, 0] = -grads[:, 1] - grads[:, 2]
        return grads

    @cached_property
    def h(self) -> float:
        p = self.nodes[self.triangles]
        edges = p[:, [1, 2, 0]] - p
        return float(np.linalg.norm(edges, axis=2).max())

    @cached_property
    def boundary_mask(self) -> np.ndarray:
        x, y = self.nodes[:, 0], self.nodes[:, 1]
        mask = ((np.abs(x) < BOUNDARY_TOL) | (np.abs(x - 1) < BOUNDARY_TOL)
                | (np.abs(y) < BOUNDARY_TOL) | (np.abs(y - 1) < BOUNDARY_TOL))
        mask.flags.writeable = False
        return mask

    @cached_property
    def boundary_nodes(self) -> np.ndarray:
        return np.flatnonzero(self.boundary_mask)

    @cached_property
    def interior_nodes(self) -> np.ndarray:
        return np.flatnonzero(~self.boundary_mask)

    def dump(self, nodes_path: str | Path, triangles_path: str | Path) -> None:
        """ 导出为两个 CSV 文件: nodes (index,x,y,is_boundary) 与 triangles (i,j,k)

        Args:
            nodes_path (str | Path): 节点文件路径
            triangles_path (str | Path): 三角形文件路径
        """
        with open(nodes_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            writer.writerow(['index', 'x', 'y', 'is_boundary'])
            for i, (x, y) in enumerate(self.nodes):
                writer.writerow([i, repr(float(x)), repr(float(y)), int(self.boundary_mask[i])])
        with open(triangles_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            writer.writerow(['i', 'j', 'k'])
            writer.writerows(self.triangles.tolist())

    @classmethod
    def load(cls, nodes_path: str | Path, triangles_path: str | Path, n: int | None = None) -> Mesh:
        """ 从 dump 产生的 CSV 文件读取网格

        Args:
            nodes_path (str | Path): 节点文件路径
            triangles_path (str | Path): 三角形文件路径
            n (int, optional): 结构网格的剖分数. Defaults to None.

        Raises:
            ValueError: 节点编号不连续

        Returns:
            Mesh: 网格
        """
        with open(nodes_path, newline='', encoding='utf-8') as f:
            rows = list(csv.DictReader(f))
        if [int(r['index']) for r in rows] != list(range(len(rows))):
            raise ValueError(f'{nodes_path} 中的节点编号必须从 0 连续递增')
        nodes = [(float(r['x']), float(r['y'])) for r in rows]
        with open(triangles_path, newline='', encoding='utf-8') as f:
            triangles = [(int(r['i']), int(r['j']), int(r['k'])) for r in csv.DictReader(f)]
        mesh = cls.from_arrays(nodes, triangles)
        return cls(mesh.nodes, mesh.triangles, n) if n is not None else mesh

    def __repr__(self) -> str:
        return f'Mesh<nodes={self.n_nodes}, triangles={self.n_triangles}, h={self.h:.4g}>'
