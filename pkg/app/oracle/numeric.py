"""
Численный оракул для проверки точных предикатов.

Работает в плавающей точке и не используется как запасной путь вычисления:
экземпляры с решающим зазором меньше settings.oracle_margin отбрасываются.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import brentq, least_squares

from app.core.config import settings
from app.core.exceptions import (
    InvalidEdge,
    MarginTooSmall,
    NoConvergence,
    NotHyperbolic,
    VertexNotFound,
)
from app.core.models import (
    DistancePair,
    EdgeConflictKind,
    EdgeSpec,
    ExistenceCount,
    InConeKind,
    NumericSphere,
    Orientation,
    ShadowType,
    Site,
    TrisectorKind,
    TrisectorPoint,
    VertexLabel,
)
from app.kernel.sign import Sign

logger = logging.getLogger(__name__)

Vector = NDArray[np.float64]

# параметр, заменяющий ±∞ при оценке предельного знака
_FAR = 1e7


def _center(site: Site) -> Vector:
    return np.array([float(c) for c in site.center], dtype=np.float64)


def _radius(site: Site) -> float:
    return float(site.radius)


def _sign(value: float, margin: float) -> Sign:
    if abs(value) < margin:
        return Sign.ZERO
    return Sign.POS if value > 0 else Sign.NEG


# Касательные сферы


def _tangency_orientation(center: Vector, sites: tuple[Site, ...]) -> Sign:
    """Знак orient3d(T1, T2, T3, T4) = det[T1 − T4; T2 − T4; T3 − T4] точек касания."""
    points = []
    for site in sites:
        direction = center - _center(site)
        points.append(_center(site) + _radius(site) * direction / np.linalg.norm(direction))
    t1, t2, t3, t4 = points
    value = float(np.linalg.det(np.array([t1 - t4, t2 - t4, t3 - t4])))
    return _sign(value, settings.oracle_margin)


def tangent_spheres_numeric(
    s1: Site, s2: Site, s3: Site, s4: Site
) -> list[tuple[NumericSphere, Sign]]:
    """
    Все сферы, внешне касающиеся четырёх сфер.

    Разности уравнений |c − C_n| = t + r_n дают три линейных уравнения
    на (c, t); на прямой решений остаётся квадратное уравнение. Корни
    уточняются методом наименьших квадратов по всем четырём невязкам.

    Args:
    ----
        s1, s2, s3, s4 (Site): Четыре сферы.

    Returns:
    -------
    list[tuple[NumericSphere, Sign]]
        Касательные сферы и знак ориентации тетраэдра точек касания.

    Raises
    ------
        NoConvergence: Вырожденная система или невязка выше допуска.

    """
    sites = (s1, s2, s3, s4)
    centers = np.array([_center(s) for s in sites])
    radii = np.array([_radius(s) for s in sites])

    matrix = np.hstack([2 * (centers[1:] - centers[0]), 2 * (radii[1:] - radii[0])[:, None]])
    rhs = (
        np.sum(centers[1:] ** 2, axis=1)
        - np.sum(centers[0] ** 2)
        - (radii[1:] ** 2 - radii[0] ** 2)
    )
    _, singular, vt = np.linalg.svd(matrix)
    particular = np.linalg.lstsq(matrix, rhs, rcond=None)[0]
    if singular[-1] < 1e-12 * max(1.0, singular[0]):
        residual = float(np.linalg.norm(matrix @ particular - rhs))
        if residual > settings.oracle_equidistance_tol * max(1.0, float(np.linalg.norm(rhs))):
            # равные радиусы и центры в одной плоскости не на одной окружности
            return []
        raise NoConvergence("Вырожденная система касания", {"sites": [s.id for s in sites]})
    null = vt[-1]

    # |c − C_1|² − (t + r_1)² как многочлен от параметра прямой
    dc, dt = particular[:3] - centers[0], particular[3] + radii[0]
    nc, nt = null[:3], null[3]
    coefficients = [
        float(nc @ nc - nt * nt),
        float(2 * (dc @ nc - dt * nt)),
        float(dc @ dc - dt * dt),
    ]
    roots = [r.real for r in np.atleast_1d(np.roots(coefficients)) if abs(r.imag) < 1e-9]

    def residuals(x: Vector) -> Vector:
        return np.linalg.norm(centers - x[:3], axis=1) - (x[3] + radii)

    found: list[Vector] = []
    for root in roots:
        seed = particular + root * null
        solution = least_squares(residuals, seed, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        x = solution.x
        if np.max(np.abs(residuals(x))) > settings.oracle_equidistance_tol * 1e3:
            raise NoConvergence("Невязка касания выше допуска", {"residual": float(solution.cost)})
        # сфера с уменьшенными радиусами должна оставаться внешней ко всем четырём
        if x[3] + radii.min() <= settings.oracle_margin:
            continue
        if any(np.linalg.norm(x - other) < 1e-7 for other in found):
            continue
        found.append(x)

    result = []
    for x in found:
        sphere = NumericSphere(center=(x[0], x[1], x[2]), radius=float(x[3]))
        result.append((sphere, _tangency_orientation(x[:3], sites)))
    logger.debug(f"Оракул: найдено {len(result)} касательных сфер")
    return result


def insphere_numeric(s1: Site, s2: Site, s3: Site, s4: Site, query: Site) -> Sign:
    """Знак ‖C_Q − c*‖ − ρ* − r_Q для касательной сферы положительной ориентации."""
    for sphere, orientation in tangent_spheres_numeric(s1, s2, s3, s4):
        if orientation is Sign.POS:
            gap = float(np.linalg.norm(_center(query) - np.array(sphere.center)))
            value = gap - sphere.radius - _radius(query)
            if abs(value) < settings.oracle_margin:
                raise MarginTooSmall("InSphere: зазор меньше допуска", {"value": value})
            return Sign.POS if value > 0 else Sign.NEG
    raise VertexNotFound("Оракул: вершина положительной ориентации не найдена", {})


# Конус, общие касательные плоскости и число сфер Аполлония


def incone_numeric(s_a: Site, s_b: Site, s_c: Site) -> InConeKind:
    """
    Положение S_c относительно полуконуса S_a, S_b по знаковому расстоянию до конуса.

    Для точки с осевой координатой a и расстоянием до оси ρ знаковое
    расстояние до поверхности равно ρ·√(1 − s²) − s·a − r_a, где s есть
    синус полуугла конуса.

    Raises
    ------
        MarginTooSmall: Если сфера почти касается конуса.

    """
    if s_b.radius < s_a.radius:
        s_a, s_b = s_b, s_a
    ca, cb, cc = _center(s_a), _center(s_b), _center(s_c)
    axis = cb - ca
    length = float(np.linalg.norm(axis))
    axis = axis / length
    slope = (_radius(s_b) - _radius(s_a)) / length

    offset = cc - ca
    along = float(offset @ axis)
    across = float(np.linalg.norm(offset - along * axis))
    margin = settings.oracle_margin
    if slope > 0:
        apex_gap = slope * along + _radius(s_a)
        if abs(apex_gap) < margin:
            raise MarginTooSmall("InCone: центр у вершины конуса", {"gap": apex_gap})
        if apex_gap < 0:
            return InConeKind.OUTSIDE

    value = across * math.sqrt(1 - slope * slope) - slope * along - _radius(s_a) + _radius(s_c)
    if value < -margin:
        return InConeKind.INSIDE
    if value > margin:
        return InConeKind.OUTSIDE
    if across < margin:
        return InConeKind.CIRCLE_TOUCH
    raise MarginTooSmall("InCone: касание конуса", {"value": value})


def common_tangent_planes(s_i: Site, s_j: Site, s_k: Site) -> list[tuple[Vector, float]]:
    """
    Общие касательные плоскости трёх сфер, оставляющие центры на положительной стороне.

    Плоскость n·x + d = 0 с |n| = 1 удовлетворяет n·C_m + d = r_m.

    Raises
    ------
        NoConvergence: Если центры коллинеарны.
        MarginTooSmall: Если две плоскости почти совпадают.

    """
    sites = (s_i, s_j, s_k)
    matrix = np.array([[*_center(s), 1.0] for s in sites])
    rhs = np.array([_radius(s) for s in sites])
    _, singular, vt = np.linalg.svd(matrix)
    if singular[-1] < 1e-12 * max(1.0, singular[0]):
        raise NoConvergence("Центры трёх сфер коллинеарны", {})
    particular = np.linalg.lstsq(matrix, rhs, rcond=None)[0]
    null = vt[-1]
    n0, w = particular[:3], null[:3]
    a, b, c = float(w @ w), 2 * float(n0 @ w), float(n0 @ n0) - 1.0
    disc = b * b - 4 * a * c
    if abs(disc) < settings.oracle_margin:
        raise MarginTooSmall("Касательные плоскости почти совпадают", {"disc": disc})
    if disc < 0:
        return []
    planes = []
    for root in ((-b - math.sqrt(disc)) / (2 * a), (-b + math.sqrt(disc)) / (2 * a)):
        x = particular + root * null
        planes.append((x[:3], float(x[3])))
    return planes


def trisector_numeric(s_i: Site, s_j: Site, s_k: Site) -> TrisectorKind:
    """HYPERBOLIC при двух общих касательных плоскостях, иначе ELLIPTIC."""
    planes = common_tangent_planes(s_i, s_j, s_k)
    return TrisectorKind.HYPERBOLIC if len(planes) == 2 else TrisectorKind.ELLIPTIC


def distance_numeric(s_i: Site, s_j: Site, s_k: Site, s_alpha: Site) -> DistancePair:
    """
    Знаки расстояний S_α до плоскостей Π⁻ и Π⁺.

    Π⁺ обращена нормалью против (C_j − C_i) × (C_k − C_i).

    Raises
    ------
        NotHyperbolic: Если общих плоскостей нет.
        MarginTooSmall: Если S_α почти касается плоскости.

    """
    planes = common_tangent_planes(s_i, s_j, s_k)
    if len(planes) != 2:
        raise NotHyperbolic("Нет общих касательных плоскостей", {})
    ci = _center(s_i)
    orientation = np.cross(_center(s_j) - ci, _center(s_k) - ci)
    signs = {}
    for normal, offset in planes:
        value = float(normal @ _center(s_alpha)) + offset - _radius(s_alpha)
        if abs(value) < settings.oracle_margin:
            raise MarginTooSmall("Distance: S_α почти касается плоскости", {"value": value})
        side = "plus" if float(normal @ orientation) < 0 else "minus"
        signs[side] = Sign.POS if value > 0 else Sign.NEG
    return DistancePair(sigma_minus=signs["minus"], sigma_plus=signs["plus"])


def existence_numeric(s_i: Site, s_j: Site, s_k: Site, s_a: Site) -> ExistenceCount:
    """Количество найденных внешних касательных сфер."""
    count = len(tangent_spheres_numeric(s_i, s_j, s_k, s_a))
    return (ExistenceCount.ZERO, ExistenceCount.ONE, ExistenceCount.TWO)[count]


# Параметризация трисектрисы


@dataclass(frozen=True)
class Trisector:
    """
    Гиперболическая трисектриса трёх сфер.

    Точка с радиусом Аполлония ρ лежит на q0 + ρ·q1 ± h(ρ)·normal;
    ρ0 отвечает точке o_ijk в плоскости центров.
    """

    center_i: Vector
    radius_i: float
    q0: Vector
    q1: Vector
    normal: Vector
    rho0: float

    def height(self, rho: float) -> float:
        offset = self.q0 + rho * self.q1 - self.center_i
        return math.sqrt(max((rho + self.radius_i) ** 2 - float(offset @ offset), 0.0))

    def point(self, t: float) -> tuple[Vector, float]:
        """Точка трисектрисы и её радиус Аполлония по значению параметра t."""
        rho = self.rho0 + abs(t)
        base = self.q0 + rho * self.q1
        return base + math.copysign(self.height(rho), t) * self.normal, rho

    def points(self, ts: Vector) -> tuple[Vector, Vector]:
        """Векторная форма point: точки формы (n, 3) и радиусы формы (n,)."""
        rho = self.rho0 + np.abs(ts)
        offset = self.q0 + rho[:, None] * self.q1 - self.center_i
        squared = (rho + self.radius_i) ** 2 - np.einsum("ij,ij->i", offset, offset)
        height = np.copysign(np.sqrt(np.maximum(squared, 0.0)), ts)
        return self.center_i + offset + height[:, None] * self.normal, rho

    def map_of(self, point: Vector) -> float:
        rho = float(np.linalg.norm(point - self.center_i)) - self.radius_i
        side = float((point - (self.q0 + self.rho0 * self.q1)) @ self.normal)
        return math.copysign(rho - self.rho0, side)


def build_trisector(s_i: Site, s_j: Site, s_k: Site) -> Trisector:
    """
    Численная трисектриса с ориентацией по правилу правой руки.

    Raises
    ------
        NotHyperbolic: Если ветвь трисектрисы ограничена или центры коллинеарны.

    """
    ci, cj, ck = _center(s_i), _center(s_j), _center(s_k)
    ri, rj, rk = _radius(s_i), _radius(s_j), _radius(s_k)
    normal = np.cross(cj - ci, ck - ci)
    length = float(np.linalg.norm(normal))
    if length < settings.oracle_margin:
        raise NotHyperbolic("Центры трёх сфер коллинеарны", {})
    normal = normal / length

    matrix = np.array([2 * (cj - ci), 2 * (ck - ci), normal])
    b0 = np.array(
        [
            cj @ cj - ci @ ci - (rj * rj - ri * ri),
            ck @ ck - ci @ ci - (rk * rk - ri * ri),
            normal @ ci,
        ]
    )
    b1 = np.array([-2 * (rj - ri), -2 * (rk - ri), 0.0])
    q0 = np.linalg.solve(matrix, b0)
    q1 = np.linalg.solve(matrix, b1)

    # h²(ρ) = (ρ + r_i)² − |q0 + ρ·q1 − C_i|²
    offset = q0 - ci
    leading = 1.0 - float(q1 @ q1)
    if leading <= settings.oracle_margin:
        raise NotHyperbolic("Трисектриса не гиперболическая", {"leading": leading})
    linear = 2.0 * (ri - float(q1 @ offset))
    constant = ri * ri - float(offset @ offset)
    disc = linear * linear - 4 * leading * constant
    if disc < 0:
        raise NotHyperbolic("Трисектриса не пересекает плоскость центров", {"disc": disc})
    rho0 = (-linear + math.sqrt(disc)) / (2 * leading)
    if min(rho0 + ri, rho0 + rj, rho0 + rk) < 0:
        raise NotHyperbolic("Трисектриса не гиперболическая", {"rho0": rho0})
    return Trisector(ci, ri, q0, q1, normal, rho0)


def trisector_sample(s_i: Site, s_j: Site, s_k: Site, t: float) -> TrisectorPoint:
    """
    Точка трисектрисы со значением параметризации t.

    Args:
    ----
        s_i, s_j, s_k (Site): Сферы гиперболической трисектрисы.
        t (float): Значение map.

    Returns:
    -------
    TrisectorPoint
        Точка и фактическое значение map в ней.

    """
    curve = build_trisector(s_i, s_j, s_k)
    point, _ = curve.point(t)
    return TrisectorPoint(point=(point[0], point[1], point[2]), map_value=curve.map_of(point))


# Теневые области


def _shadow_function(curve: Trisector, alpha: Site) -> Callable[[float], float]:
    center, radius = _center(alpha), _radius(alpha)

    def value(t: float) -> float:
        point, rho = curve.point(t)
        return float(np.linalg.norm(center - point)) - rho - radius

    return value


def shadow_classify_numeric(
    s_i: Site, s_j: Site, s_k: Site, s_alpha: Site
) -> tuple[ShadowType, list[float]]:
    """
    Тип тени S_α на трисектрисе S_i, S_j, S_k (см. shadow_on_trisector).

    Raises
    ------
        NotHyperbolic: Если трисектриса не гиперболическая.
        MarginTooSmall: Если сфера почти касается трисектрисы или её асимптот.

    """
    return shadow_on_trisector(build_trisector(s_i, s_j, s_k), s_alpha)


def shadow_on_trisector(curve: Trisector, s_alpha: Site) -> tuple[ShadowType, list[float]]:
    """
    Тип тени S_α по знакам δ(C_α, сфера в точке трисектрисы) − r_α на сетке.

    Сетка t = span·tan(π·u/2) по равномерным u ∈ (−1, 1); смены знака
    уточняются методом Брента, знаки на бесконечностях берутся в точках ±_FAR.

    Returns
    -------
    tuple[ShadowType, list[float]]
        Тип и отсортированные конечные концы как значения map.

    Raises
    ------
        MarginTooSmall: Если сфера почти касается трисектрисы или её асимптот.

    """
    value = _shadow_function(curve, s_alpha)
    margin = settings.oracle_margin

    u = np.linspace(-1.0, 1.0, settings.oracle_grid_points)[1:-1]
    grid = settings.oracle_grid_span * np.tan(np.pi * u / 2)
    points, radii = curve.points(grid)
    samples = np.linalg.norm(points - _center(s_alpha), axis=1) - radii - _radius(s_alpha)

    at_minus, at_plus = value(-_FAR), value(_FAR)
    if min(abs(at_minus), abs(at_plus)) < margin:
        raise MarginTooSmall("Shadow: сфера почти касается общей плоскости", {})

    inside = samples < 0
    crossing = inside[:-1] != inside[1:]
    # локальный минимум |value| ниже допуска без смены знака
    magnitude = np.abs(samples)
    touch = (magnitude[1:-1] < margin) & (
        magnitude[1:-1] <= np.minimum(magnitude[:-2], magnitude[2:])
    )
    touch &= ~crossing[1:]
    if touch.any():
        n = int(np.flatnonzero(touch)[0]) + 1
        raise MarginTooSmall("Shadow: касание без смены знака", {"t": float(grid[n])})

    endpoints = [
        float(
            brentq(
                value, grid[n], grid[n + 1], xtol=1e-14, maxiter=settings.oracle_bisection_steps
            )
        )
        for n in np.flatnonzero(crossing)
    ]

    minus_in, plus_in = at_minus < 0, at_plus < 0
    key = (len(endpoints), minus_in, plus_in)
    table = {
        (0, True, True): ShadowType.FULL,
        (0, False, False): ShadowType.EMPTY,
        (1, True, False): ShadowType.LEFT_RAY,
        (1, False, True): ShadowType.RIGHT_RAY,
        (2, False, False): ShadowType.INTERVAL,
        (2, True, True): ShadowType.TWO_RAYS,
    }
    if key not in table:
        raise NoConvergence("Shadow: несогласованная сетка", {"key": str(key)})
    return table[key], sorted(endpoints)


def vertex_maps(
    s_i: Site, s_j: Site, s_k: Site, s_n: Site
) -> dict[Orientation, float]:
    """Значения map вершин v_ijkn и v_ikjn (см. vertex_maps_on)."""
    return vertex_maps_on(build_trisector(s_i, s_j, s_k), s_n)


def vertex_maps_on(curve: Trisector, s_n: Site) -> dict[Orientation, float]:
    """
    Значения map вершин v_ijkn (IJK, конец φ) и v_ikjn (IKJ, конец χ).

    Соответствие концов тени вершинам: для (χ, φ) и (χ, +∞) меньший конец
    есть v_ikjn, для (−∞, φ) ∪ (χ, +∞) меньший конец есть v_ijkn.
    """
    kind, ends = shadow_on_trisector(curve, s_n)
    if kind is ShadowType.INTERVAL:
        return {Orientation.IKJ: ends[0], Orientation.IJK: ends[1]}
    if kind is ShadowType.TWO_RAYS:
        return {Orientation.IJK: ends[0], Orientation.IKJ: ends[1]}
    if kind is ShadowType.RIGHT_RAY:
        return {Orientation.IKJ: ends[0]}
    if kind is ShadowType.LEFT_RAY:
        return {Orientation.IJK: ends[0]}
    return {}


def order_numeric(s_i: Site, s_j: Site, s_k: Site, s_a: Site, s_b: Site) -> list[VertexLabel]:
    """
    Порядок вершин S_a и S_b по значениям map.

    Raises
    ------
        VertexNotFound: Если у S_a или S_b нет вершин на трисектрисе.
        MarginTooSmall: Если две вершины ближе допуска.

    """
    curve = build_trisector(s_i, s_j, s_k)
    entries = []
    for site, role in ((s_a, "a"), (s_b, "b")):
        maps = vertex_maps_on(curve, site)
        if not maps:
            raise VertexNotFound("Оракул: у сферы нет вершин на трисектрисе", {"role": role})
        for orientation, position in maps.items():
            label = VertexLabel(
                orientation=orientation,
                i=s_i.label("i"),
                j=s_j.label("j"),
                k=s_k.label("k"),
                n=site.label(role),
            )
            entries.append((position, label))
    entries.sort(key=lambda entry: entry[0])
    for (left, _), (right, _) in zip(entries, entries[1:], strict=False):
        if right - left < settings.oracle_margin * 10:
            raise MarginTooSmall("Order: вершины слишком близки", {"gap": right - left})
    return [label for _, label in entries]


# Конфликт с ребром


def validate_edge(edge: EdgeSpec) -> tuple[float, float]:
    """
    Значения map концов ребра λ = v_ijkl и μ = v_ikjm.

    Raises
    ------
        InvalidEdge: Если вершина не существует или λ ≥ μ.

    """
    curve = build_trisector(*edge.trisector)
    left = vertex_maps_on(curve, edge.l).get(Orientation.IJK)
    right = vertex_maps_on(curve, edge.m).get(Orientation.IKJ)
    if left is None or right is None:
        raise InvalidEdge("Концы ребра не существуют", {"l": edge.l.id, "m": edge.m.id})
    if right - left < settings.oracle_margin:
        raise InvalidEdge("Нарушен порядок v_ijkl ≺ v_ikjm", {"lambda": left, "mu": right})
    return left, right


def edge_conflict_numeric(edge: EdgeSpec, s_q: Site) -> EdgeConflictKind:
    """
    Тип пересечения ребра (λ, μ) с численной тенью S_q.

    Raises
    ------
        InvalidEdge: Если ребро некорректно.
        MarginTooSmall: Если конец тени ближе допуска к концу ребра.

    """
    lam, mu = validate_edge(edge)
    kind, ends = shadow_classify_numeric(*edge.trisector, s_q)
    if kind is ShadowType.EMPTY:
        return EdgeConflictKind.NO_CONFLICT
    if kind is ShadowType.FULL:
        return EdgeConflictKind.ENTIRE_EDGE

    margin = settings.oracle_margin
    for end in ends:
        if min(abs(end - lam), abs(end - mu)) < margin:
            raise MarginTooSmall("EdgeConflict: конец тени у конца ребра", {"end": end})

    if kind is ShadowType.LEFT_RAY:
        pieces = [(-math.inf, ends[0])]
    elif kind is ShadowType.RIGHT_RAY:
        pieces = [(ends[0], math.inf)]
    elif kind is ShadowType.INTERVAL:
        pieces = [(ends[0], ends[1])]
    else:
        pieces = [(-math.inf, ends[0]), (ends[1], math.inf)]

    clipped = []
    for lo, hi in pieces:
        if hi <= lam or lo >= mu:
            continue
        clipped.append((lo <= lam, hi >= mu))
    if not clipped:
        return EdgeConflictKind.NO_CONFLICT
    if len(clipped) == 2:
        return EdgeConflictKind.BOTH_VERTICES
    return {
        (True, True): EdgeConflictKind.ENTIRE_EDGE,
        (True, False): EdgeConflictKind.LEFT_VERTEX,
        (False, True): EdgeConflictKind.RIGHT_VERTEX,
        (False, False): EdgeConflictKind.INTERIOR,
    }[clipped[0]]
