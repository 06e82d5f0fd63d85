# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/model/types.py
# Description: 约化 LdG 模型的数据类型

from __future__ import annotations
import csv
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from ..mesh import Mesh, interpolate_boundary

# 3×3 对称实矩阵, 以真空介电常数为单位
DielectricTensor = np.ndarray


@dataclass(frozen=True)
class ReducedParams:
    """ 无量纲参数 α = L/(2Cλ²), β = B²/(4C²) (一般情形 β = |A|/(2C))
    """
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ValueError(f'alpha 必须为正, 实际为 {self.alpha}')
        if not self.beta > 0:
            raise ValueError(f'beta 必须为正, 实际为 {self.beta}')


@dataclass(frozen=True)
class MaterialParams:
    """ 物理常数, L 单位 J/m, A/B/C 单位 J/m³, lam 为区域长度尺度 (m)
    """
    L: float
    B: float
    C: float
    A: float
    lam: float

    def __post_init__(self) -> None:
        if not self.C > 0:
            raise ValueError(f'C 必须为正, 实际为 {self.C}')
        if not self.L > 0:
            raise ValueError(f'L 必须为正, 实际为 {self.L}')
        if not self.lam > 0:
            raise ValueError(f'lam 必须为正, 实际为 {self.lam}')


class Director(NamedTuple):
    s: float
    theta: float
    defect: bool


@dataclass
class QField:
    """ 约化序参量 (Q11, Q12) 的节点值
    """
    mesh: Mesh
    q11: np.ndarray
    q12: np.ndarray

    def __post_init__(self) -> None:
        self.q11 = np.array(self.q11, dtype=float)
        self.q12 = np.array(self.q12, dtype=float)
        if self.q11.shape != (self.mesh.n_nodes,) or self.q12.shape != (self.mesh.n_nodes,):
            raise ValueError(f'节点值长度必须等于节点数 {self.mesh.n_nodes}, '
                             f'实际为 {self.q11.shape} 与 {self.q12.shape}')

    def copy(self) -> QField:
        return QField(self.mesh, self.q11.copy(), self.q12.copy())

    def with_boundary(self, bc) -> QField:
        """ 返回边界节点被 bc 的插值覆盖后的副本
        """
        out = self.copy()
        values = interpolate_boundary(self.mesh, bc)
        out.q11[self.mesh.boundary_nodes] = values[:, 0]
        out.q12[self.mesh.boundary_nodes] = values[:, 1]
        return out

    def dump(self, path: str | Path) -> None:
        """ 写出规范 CSV: node_index,x,y,q11,q12

        Args:
            path (str | Path): 文件路径
        """
        with open(path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            writer.writerow(['node_index', 'x', 'y', 'q11', 'q12'])
            for i, ((x, y), a, b) in enumerate(zip(self.mesh.nodes, self.q11, self.q12)):
                writer.writerow([i, repr(float(x)), repr(float(y)), repr(float(a)), repr(float(b))])

    @classmethod
    def load(cls, path: str | Path, mesh: Mesh) -> QField:
        """ 读取规范 CSV, 节点坐标必须与 mesh 一致

        Args:
            path (str | Path): 文件路径
            mesh (Mesh): 场所在的网格

        Raises:
            ValueError: 节点数或坐标与网格不一致

        Returns:
            QField: 场
        """
        with open(path, newline='', encoding='utf-8') as f:
            rows = list(csv.DictReader(f))
        if len(rows) != mesh.n_nodes:
            raise ValueError(f'{path} 有 {len(rows)} 个节点, 网格有 {mesh.n_nodes} 个')
        rows.sort(key=lambda r: int(r['node_index']))
        xy = np.array([(float(r['x']), float(r['y'])) for r in rows])
        if not np.allclose(xy, mesh.nodes, atol=1e-12):
            raise ValueError(f'{path} 的节点坐标与网格不一致')
        return cls(mesh,
                   np.array([float(r['q11']) for r in rows]),
                   np.array([float(r['q12']) for r in rows]))
