# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/bayes/profile.py
# Description: 剖面似然扫描与网格求积后验矩

import warnings

import numpy as np
from loguru import logger
from scipy.integrate import cumulative_trapezoid, trapezoid
from tqdm import tqdm

from .forward import ForwardModel
from .likelihood import Posterior, log_likelihood
from .prior import Prior
from .types import ErrorModel, MassEscapeWarning, Observation, ProfileCurve, QuadratureMoments


def _pairs(grid: np.ndarray, beta: float | None) -> np.ndarray:
    if grid.ndim == 1:
        if beta is None:
            raise ValueError('一维网格需要给定固定的 beta')
        return np.column_stack([grid, np.full(len(grid), beta)])
    if grid.ndim == 2 and grid.shape[1] == 2:
        return grid
    raise ValueError(f'网格形状应为 (k,) 或 (k, 2), 实际为 {grid.shape}')


def profile_scan(obs: Observation,
                 grid,
                 forward: ForwardModel,
                 *,
                 beta: float | None = None,
                 error_model: ErrorModel | None = None,
                 progress: bool = False) -> ProfileCurve:
    """ 在参数网格上计算归一化似然 exp(ℓ - max ℓ)

    沿网格顺序做延拓: 每个成功的点都被接受, 下一个点从它热启动.
    平坦度为离峰值最远的网格端点处的归一化似然, 尾部质量见 tail_mass (坐标取网格点列的弧长).

    Args:
        obs (Observation): 观测
        grid (array_like): 一维 α 网格 (配合 beta) 或 (k, 2) 的 (α, β) 点列
        forward (ForwardModel): 正问题映射
        beta (float, optional): 一维网格时固定的 β. Defaults to None.
        error_model (ErrorModel, optional): 覆盖观测的经验方差. Defaults to None.
        progress (bool, optional): 显示进度条. Defaults to False.

    Raises:
        ValueError: 网格为空

    Returns:
        ProfileCurve: 归一化似然曲线与平坦度
    """
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError('网格不能为空')
    pairs = _pairs(grid, beta)
    ll = np.empty(len(pairs))
    for k, (a, b) in enumerate(tqdm(pairs, desc='profile', disable=not progress)):
        ll[k] = log_likelihood(obs, (a, b), forward, error_model)
        if np.isfinite(ll[k]):
            forward.accept()

    peak = float(np.max(ll))
    if not np.isfinite(peak):
        logger.warning('剖面扫描的所有网格点上正问题均无解')
        return ProfileCurve(grid, ll, np.zeros(len(ll)), float('nan'), 0)
    values = np.exp(ll - peak)
    argmax = int(np.argmax(ll))
    coords = grid if grid.ndim == 2 else grid[:, None]
    far = 0 if np.linalg.norm(coords[0] - coords[argmax]) >= np.linalg.norm(coords[-1] - coords[argmax]) else -1
    flatness = float(values[far])
    arc = np.concatenate([[0.0], np.cumsum(np.linalg.norm(np.diff(coords, axis=0), axis=1))])
    tail = tail_mass(arc, values)
    logger.info(f'剖面扫描完成: 峰值位于 {grid[argmax]}, 平坦度 {flatness:.4g}, 尾部质量 {tail:.4g}')
    return ProfileCurve(grid, ll, values, flatness, argmax, tail)


def _segment_mass(x: np.ndarray, v: np.ndarray, a: float, b: float) -> float:
    a, b = max(a, x[0]), min(b, x[-1])
    if b <= a:
        return 0.0
    pts = np.union1d(x[(x > a) & (x < b)], [a, b])
    return float(trapezoid(np.interp(pts, x, v), pts))


def tail_mass(x, values, spread: float = 3.0) -> float:
    """ 分段线性似然曲线在峰值 spread 个半高半宽之外的质量占比

    半高半宽取峰值两侧半高交点距离的平均, 只有一侧交点时取该侧.
    对高斯曲线 (spread=3) 约为 4e-4.

    Args:
        x (array_like): 严格递增的坐标
        values (array_like): 归一化似然, 峰值为 1
        spread (float, optional): 半高半宽的倍数. Defaults to 3.0.

    Returns:
        float: 尾部质量占比, 曲线两侧都未降到半高以下时为 0
    """
    x = np.asarray(x, dtype=float)
    v = np.asarray(values, dtype=float)
    if len(x) < 3:
        return 0.0
    k = int(np.argmax(v))
    half = 0.5 * v[k]
    widths = []
    below = np.nonzero(v[:k] < half)[0]
    if below.size:
        i = below[-1]
        widths.append(x[k] - np.interp(half, [v[i], v[i + 1]], [x[i], x[i + 1]]))
    below = np.nonzero(v[k + 1:] < half)[0]
    if below.size:
        j = k + 1 + below[0]
        widths.append(np.interp(half, [v[j], v[j - 1]], [x[j], x[j - 1]]) - x[k])
    total = float(trapezoid(v, x))
    if not widths or total <= 0:
        return 0.0
    d = spread * float(np.mean(widths))
    return max(0.0, 1.0 - _segment_mass(x, v, x[k] - d, x[k] + d) / total)


def identifiability_verdict(flatness: float,
                            plateau: float = 0.5,
                            peaked: float = 0.01,
                            *,
                            tail: float = 0.0,
                            fat_tail: float = 0.02) -> str:
    """ 可辨识性判断: 'plateau' (不可辨识), 'fat-tail', 'peaked' 或 'unknown'

    端点平坦度超过 plateau 为 plateau; 端点平坦度不低于 peaked 或尾部质量超过 fat_tail 为 fat-tail.
    平坦度为 nan (全部网格点正问题无解) 时为 'unknown'.
    """
    if np.isnan(flatness):
        return 'unknown'
    if flatness > plateau:
        return 'plateau'
    if flatness >= peaked or tail > fat_tail:
        return 'fat-tail'
    return 'peaked'


def quadrature_moments(prior: Prior,
                       obs: Observation,
                       grid,
                       forward: ForwardModel,
                       *,
                       beta: float | None = None,
                       error_model: ErrorModel | None = None,
                       mass_tol: float = 0.01,
                       progress: bool = False) -> QuadratureMoments:
    """ 用梯形公式在网格上计算后验的归一化常数, 均值与中位数

    全部运算在对数空间中进行; 最外层网格单元中的质量超过 mass_tol 时发出 MassEscapeWarning.

    Args:
        prior (Prior): 先验
        obs (Observation): 观测
        grid (np.ndarray | tuple[np.ndarray, np.ndarray]): 一维 α 网格, 或二维张量积网格 (alphas, betas)
        forward (ForwardModel): 正问题映射
        beta (float, optional): 一维网格时固定的 β. Defaults to None.
        error_model (ErrorModel, optional): 覆盖观测的经验方差. Defaults to None.
        mass_tol (float, optional): 外层质量阈值. Defaults to 0.01.
        progress (bool, optional): 显示进度条. Defaults to False.

    Raises:
        ValueError: 网格点数少于 3 或网格上后验处处为 0

    Returns:
        QuadratureMoments: 后验矩
    """
    if isinstance(grid, tuple):
        alphas, betas = (np.asarray(g, dtype=float) for g in grid)
        posterior = Posterior(prior, obs, forward, None, error_model)
        if len(alphas) < 3 or len(betas) < 3:
            raise ValueError('每个方向至少需要 3 个网格点')
        lp = np.empty((len(alphas), len(betas)))
        for i in tqdm(range(len(alphas)), desc='quadrature', disable=not progress):
            for j in range(len(betas)):
                lp[i, j] = posterior([alphas[i], betas[j]])
                if np.isfinite(lp[i, j]):
                    forward.accept()
        return _moments_2d(alphas, betas, lp, mass_tol)

    alphas = np.asarray(grid, dtype=float)
    if len(alphas) < 3:
        raise ValueError('至少需要 3 个网格点')
    posterior = Posterior(prior, obs, forward, beta, error_model)
    lp = np.empty(len(alphas))
    for i in tqdm(range(len(alphas)), desc='quadrature', disable=not progress):
        lp[i] = posterior([alphas[i]])
        if np.isfinite(lp[i]):
            forward.accept()
    return _moments_1d(alphas, lp, mass_tol)


def _check_escape(escaped: float, mass_tol: float) -> bool:
    if escaped > mass_tol:
        message = f'{escaped:.2%} 的后验质量位于最外层网格单元, 网格可能未覆盖后验'
        logger.warning(message)
        warnings.warn(message, MassEscapeWarning, stacklevel=3)
        return True
    return False


def _median(x: np.ndarray, p: np.ndarray) -> float:
    cdf = cumulative_trapezoid(p, x, initial=0.0)
    cdf /= cdf[-1]
    return float(np.interp(0.5, cdf, x))


def _moments_1d(x: np.ndarray, lp: np.ndarray, mass_tol: float) -> QuadratureMoments:
    peak = np.max(lp)
    if not np.isfinite(peak):
        raise ValueError('网格上后验处处为 0')
    p = np.exp(lp - peak)
    Z = trapezoid(p, x)
    escaped = 1.0 - trapezoid(p[1:-1], x[1:-1]) / Z
    return QuadratureMoments(mean=np.array([trapezoid(x * p, x) / Z]),
                             median=np.array([_median(x, p)]),
                             log_normalizer=float(np.log(Z) + peak),
                             escaped_fraction=float(escaped),
                             mass_escape=_check_escape(escaped, mass_tol))


def _moments_2d(alphas: np.ndarray, betas: np.ndarray, lp: np.ndarray, mass_tol: float) -> QuadratureMoments:
    peak = np.max(lp)
    if not np.isfinite(peak):
        raise ValueError('网格上后验处处为 0')
    p = np.exp(lp - peak)
    pa = trapezoid(p, betas, axis=1)
    pb = trapezoid(p, alphas, axis=0)
    Z = trapezoid(pa, alphas)
    inner = trapezoid(trapezoid(p[1:-1, 1:-1], betas[1:-1], axis=1), alphas[1:-1])
    escaped = 1.0 - inner / Z
    return QuadratureMoments(mean=np.array([trapezoid(alphas * pa, alphas) / Z, trapezoid(betas * pb, betas) / Z]),
                             median=np.array([_median(alphas, pa), _median(betas, pb)]),
                             log_normalizer=float(np.log(Z) + peak),
                             escaped_fraction=float(escaped),
                             mass_escape=_check_escape(escaped, mass_tol))
