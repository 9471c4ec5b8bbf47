import logging
from dataclasses import dataclass

from app.core.exceptions import (
    ContainedSites,
    DegenerateConfiguration,
    DegenerateDouble,
    InfinitelyMany,
    VertexNotFound,
)
from app.core.models import Orientation, Site, TangentPlaneW, VertexLabel
from app.geometry.inversion import (
    Barred,
    barred,
    check_not_contained,
    checked_barred,
    select_pole,
)
from app.geometry.tangent_system import TangentSystem, shifted_system, system_from_barred
from app.kernel.quadext import QuadExtScalar, sign_of_quadext
from app.kernel.sign import Sign
from app.kernel.tagged import DegreeTagged

logger = logging.getLogger(__name__)

ROLES = ("i", "j", "k", "a")


@dataclass(frozen=True, slots=True)
class _Frame:
    """Полюс, приведённые строки и (возможно, сдвинутая) система касания четырёх сфер."""

    pole_index: int
    pole: Site
    rows: list[Barred]
    system: TangentSystem
    axis: int | None


def _frame(sites: tuple[Site, Site, Site, Site]) -> _Frame:
    for first in range(4):
        for second in range(first + 1, 4):
            check_not_contained(sites[first], sites[second])
    pole_index = select_pole(sites)
    pole = sites[pole_index]
    rows = [checked_barred(site, pole) for n, site in enumerate(sites) if n != pole_index]
    base = system_from_barred(rows)
    if base.E.sign("classify:E") is not Sign.ZERO:
        return _Frame(pole_index, pole, rows, base, None)

    # образы центров компланарны с началом координат: сдвиг вдоль оси с Q_m ≠ 0
    for axis in range(3):
        if base.Q[axis].sign("classify:Q") is not Sign.ZERO:
            return _Frame(pole_index, pole, rows, shifted_system(base, axis), axis)
    if len({site.radius for site in sites}) == 1:
        raise InfinitelyMany(
            "Равные радиусы и центры на одной окружности", {"sites": [s.id for s in sites]}
        )
    raise DegenerateConfiguration("Образы центров коллинеарны", {"sites": [s.id for s in sites]})


def _plane_for_root(frame: _Frame, root: int) -> tuple[QuadExtScalar, TangentPlaneW]:
    """
    Касательная плоскость для корня с номером root ∈ {+1, −1}.

    Возвращает |Q|²·E'·d (знак которого с точностью до sign(E') есть знак d)
    и плоскость, умноженную на λ = |Q|²·|E'|.
    """
    system = frame.system
    e_sign = system.E.sign("classify:E'")
    e_abs = system.E * int(e_sign)
    q2 = system.Q2
    disc = system.K

    def ext(value: DegreeTagged) -> QuadExtScalar:
        return QuadExtScalar.rational(value, disc)

    # |Q|²·d' в сдвинутой системе
    d_shifted = QuadExtScalar(system.PQ, e_abs * root, disc)
    if frame.axis is None:
        d_scaled = d_shifted * system.E
    else:
        q_o = system.Q[frame.axis]
        d_scaled = d_shifted * (system.E + q_o) - ext(q2 * system.P[frame.axis])

    normal = [(ext(q2 * system.P[m]) - d_shifted * system.Q[m]) * int(e_sign) for m in range(3)]
    plane = TangentPlaneW(
        a=normal[0],
        b=normal[1],
        c=normal[2],
        d=d_scaled * int(e_sign),
        scale=ext(q2 * e_abs),
        pole=frame.pole.label(ROLES[frame.pole_index]),
    )
    return d_scaled, plane


def _label(sites: tuple[Site, Site, Site, Site], orientation: Orientation) -> VertexLabel:
    ids = [site.label(role) for site, role in zip(sites, ROLES, strict=True)]
    return VertexLabel(orientation=orientation, i=ids[0], j=ids[1], k=ids[2], n=ids[3])


def classify_tangent_planes(
    s1: Site, s2: Site, s3: Site, s4: Site
) -> dict[VertexLabel, TangentPlaneW]:
    """
    Касательные плоскости W-пространства, отвечающие внешним сферам Аполлония.

    Для каждого корня с d > 0 ориентация тетраэдра точек касания вычисляется
    точно: det[T2 − T1; T3 − T1; T4 − T1] имеет знак s·sign(E')·(−1)^m, где m есть
    номер полюса. Вершина IJK отвечает отрицательному знаку этого det, то есть
    положительному orient3d(T1, T2, T3, T4) = det[T1 − T4; T2 − T4; T3 − T4].

    Args:
    ----
        s1, s2, s3, s4 (Site): Сферы в порядке, задающем ориентацию.

    Returns:
    -------
    dict[VertexLabel, TangentPlaneW]
        От нуля до двух плоскостей, помеченных IJK или IKJ.

    Raises
    ------
        DegenerateDouble: Двукратный корень с d > 0.
        InfinitelyMany: Равные радиусы и центры на одной окружности.

    """
    sites = (s1, s2, s3, s4)
    frame = _frame(sites)
    system = frame.system
    k_sign = system.K.sign("classify:K")
    if k_sign is Sign.NEG:
        return {}

    e_sign = system.E.sign("classify:E'")
    result: dict[VertexLabel, TangentPlaneW] = {}
    for root in (1, -1):
        d_scaled, plane = _plane_for_root(frame, root)
        d_sign = e_sign * sign_of_quadext(d_scaled, "classify:d")
        if d_sign is not Sign.POS:
            continue
        if k_sign is Sign.ZERO:
            raise DegenerateDouble(
                "Двукратная касательная плоскость", {"sites": [s.id for s in sites]}
            )
        parity = 1 if frame.pole_index % 2 else -1
        orientation_sign = e_sign * (root * parity)
        orientation = Orientation.IJK if orientation_sign is Sign.POS else Orientation.IKJ
        result[_label(sites, orientation)] = plane
    logger.debug(
        f"Классификация плоскостей: полюс {frame.pole_index}, "
        f"метки {[label.orientation.value for label in result]}"
    )
    return result


def tangency_residual(plane: TangentPlaneW, row: Barred) -> QuadExtScalar:
    """
    Величина a·x̄ + b·ȳ + c·z̄ + d·p̄ − λ·r̄ для приведённой сферы.

    Равна нулю для сфер, касающихся плоскости; её знак есть знак
    пересечения образа сферы с отрицательной стороной плоскости.
    """
    return (
        plane.a * row.x
        + plane.b * row.y
        + plane.c * row.z
        + plane.d * row.p
        - plane.scale * row.r
    )


def _nested_sign(site: Site, query: Site) -> Sign | None:
    """
    Ответ InSphere для запроса, вложенного в определяющую сферу или содержащего её.

    Сфера Аполлония касается site внешним образом: запрос внутри site с ней
    не пересекается, запрос, содержащий site, содержит и точку касания.
    """
    power = barred(site, query).p.sign("insphere:nested")
    if power is Sign.POS:
        return None
    if power is Sign.ZERO:
        raise ContainedSites(
            "Запрос касается определяющей сферы изнутри",
            {"site": site.id, "query": query.id},
        )
    return Sign.POS if query.radius < site.radius else Sign.NEG


def insphere(s1: Site, s2: Site, s3: Site, s4: Site, query: Site) -> Sign:
    """
    Конфликт сферы-запроса со сферой Аполлония v_{s1 s2 s3 s4}.

    Args:
    ----
        s1, s2, s3, s4 (Site): Сферы, задающие вершину положительной ориентации.
        query (Site): Сфера-запрос.

    Returns:
    -------
    Sign
        NEG при пересечении, POS если не пересекает, ZERO при касании.

    Raises
    ------
        VertexNotFound: Если вершина с положительной ориентацией не существует.
        ContainedSites: Если запрос касается определяющей сферы изнутри.
        PoleDegeneracy: Если p̄ запроса равно нулю.

    """
    sites = (s1, s2, s3, s4)
    planes = classify_tangent_planes(*sites)
    label = _label(sites, Orientation.IJK)
    plane = planes.get(label)
    if plane is None:
        raise VertexNotFound(
            f"Вершина {label.token} не существует", {"available": [p.token for p in planes]}
        )
    for site, role in zip(sites, ROLES, strict=True):
        nested = _nested_sign(site, query)
        if nested is not None:
            logger.debug(f"InSphere {label.token}: запрос вложен в {site.label(role)}")
            return nested
    pole = sites[select_pole(sites)]
    row = checked_barred(query, pole, ":query")
    result = sign_of_quadext(tangency_residual(plane, row), "insphere")
    logger.debug(f"InSphere {label.token}: {result.name}")
    return result
