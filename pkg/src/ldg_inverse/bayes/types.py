# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/bayes/types.py
# Description: 贝叶斯反问题的数据类型与异常

from __future__ import annotations
import csv
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from ..mesh import Mesh
from ..model import QField

VARIANCE_TOL = 1e-14


class DegenerateObservation(ValueError):
    pass


class MassEscapeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ErrorModel:
    """ 观测两个分量的经验方差 σ11², σ12²
    """
    sigma11_sq: float
    sigma12_sq: float

    def scaled(self, c: float) -> ErrorModel:
        return ErrorModel(self.sigma11_sq * c, self.sigma12_sq * c)


@dataclass(frozen=True, eq=False)
class Observation:
    """ 观测场 (Q̄11, Q̄12) 及其来源信息 (合成数据时含 α*, β*, 分支与种子)
    """
    field: QField
    provenance: dict = field(default_factory=dict)

    @property
    def mesh(self) -> Mesh:
        return self.field.mesh

    @property
    def qbar11(self) -> np.ndarray:
        return self.field.q11

    @property
    def qbar12(self) -> np.ndarray:
        return self.field.q12

    @cached_property
    def error_model(self) -> ErrorModel:
        from .likelihood import error_variances

        return error_variances(self)

    def dump(self, csv_path: str | Path, json_path: str | Path) -> None:
        """ 写出规范 QField CSV 与来源信息 JSON

        Args:
            csv_path (str | Path): 场文件路径
            json_path (str | Path): 来源信息文件路径
        """
        self.field.dump(csv_path)
        with open(json_path, 'w', encoding='utf-8') as f:
            json.dump(self.provenance, f, ensure_ascii=False, indent=2)

    @classmethod
    def load(cls, csv_path: str | Path, json_path: str | Path | None, mesh: Mesh) -> Observation:
        provenance = {}
        if json_path is not None and Path(json_path).exists():
            with open(json_path, encoding='utf-8') as f:
                provenance = json.load(f)
        return cls(QField.load(csv_path, mesh), provenance)


@dataclass
class ProfileCurve:
    """ 参数网格上归一化的似然 exp(ℓ - max ℓ)
    """
    grid: np.ndarray
    log_likelihood: np.ndarray
    values: np.ndarray
    flatness: float
    argmax: int
    tail_mass: float = float('nan')

    @property
    def peak(self):
        return self.grid[self.argmax]

    def dump(self, path: str | Path) -> None:
        """ 写出两列 CSV (theta, likelihood); 二维网格时写 alpha, beta, likelihood
        """
        with open(path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            if self.grid.ndim == 1:
                writer.writerow(['theta', 'likelihood'])
                for t, v in zip(self.grid, self.values):
                    writer.writerow([repr(float(t)), repr(float(v))])
            else:
                writer.writerow(['alpha', 'beta', 'likelihood'])
                for (a, b), v in zip(self.grid, self.values):
                    writer.writerow([repr(float(a)), repr(float(b)), repr(float(v))])


@dataclass
class QuadratureMoments:
    """ 网格求积得到的后验矩, 每个坐标一个分量
    """
    mean: np.ndarray
    median: np.ndarray
    log_normalizer: float
    escaped_fraction: float
    mass_escape: bool
