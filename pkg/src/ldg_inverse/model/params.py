# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/model/params.py
# Description: (α, β) 与物理常数 (L, B, C, A) 之间的换算

import math

from .types import MaterialParams, ReducedParams

# MBBA 体能常数 (J/m³)
MBBA = {'B': 0.64e6, 'C': 0.35e6}


def special_temperature(B: float, C: float) -> float:
    """ 特殊温度 A = -B²/(3C)
    """
    return -B * B / (3 * C)


def material_from_reduced(p: ReducedParams, lam: float, A: float) -> MaterialParams:
    """ 特殊温度下由 (α, β) 恢复物理常数: C = -3A/(4β), B = √(4C²β), L = 2αCλ²

    Args:
        p (ReducedParams): 无量纲参数
        lam (float): 长度尺度 λ (m)
        A (float): 重标温度 (J/m³), 须为负

    Raises:
        ValueError: A ≥ 0

    Returns:
        MaterialParams: 满足 A = -B²/(3C) 的物理常数
    """
    if A >= 0:
        raise ValueError(f'A 必须为负, 实际为 {A}')
    C = -3 * A / (4 * p.beta)
    B = math.sqrt(4 * C * C * p.beta)
    L = 2 * p.alpha * C * lam * lam
    return MaterialParams(L=L, B=B, C=C, A=A, lam=lam)


def reduced_from_material(m: MaterialParams) -> ReducedParams:
    """ α = L/(2Cλ²), β = B²/(4C²)
    """
    return ReducedParams(alpha=m.L / (2 * m.C * m.lam ** 2), beta=m.B ** 2 / (4 * m.C ** 2))


def material_from_reduced_general(p: ReducedParams, lam: float, A: float) -> tuple[float, float]:
    """ 一般温度下由 (α, β) 恢复 C = |A|/(2β) 与 L = 2αλ²C

    Args:
        p (ReducedParams): 无量纲参数
        lam (float): 长度尺度 λ (m)
        A (float): 重标温度 (J/m³), 须为负

    Raises:
        ValueError: A ≥ 0

    Returns:
        tuple[float, float]: (C, L)
    """
    if A >= 0:
        raise ValueError(f'A 必须为负, 实际为 {A}')
    C = abs(A) / (2 * p.beta)
    return C, 2 * p.alpha * lam * lam * C


def reduced_from_material_general(C: float, L: float, lam: float, A: float) -> ReducedParams:
    return ReducedParams(alpha=L / (2 * lam * lam * C), beta=abs(A) / (2 * C))
