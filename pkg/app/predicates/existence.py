import logging

from app.core.exceptions import DegenerateConfiguration
from app.core.models import ExistenceCount, Site
from app.geometry.inversion import (
    ONE,
    barred,
    center_of,
    check_not_contained,
    checked_barred,
    select_pole,
)
from app.geometry.tangent_system import TangentSystem, system_from_barred
from app.kernel.linalg import det, dot, replace_column
from app.kernel.sign import Sign

logger = logging.getLogger(__name__)


def existence(s_i: Site, s_j: Site, s_k: Site, s_a: Site) -> ExistenceCount:
    """
    Количество внешних сфер Аполлония, касающихся четырёх сфер.

    При равных радиусах задача сводится к сфере через четыре центра:
    проверяется плоскость тетраэдра, затем принадлежность одной окружности.
    Иначе после инверсии относительно сферы минимального радиуса считаются
    касательные плоскости к трём образам с d > 0.

    Args:
    ----
        s_i, s_j, s_k, s_a (Site): Четыре попарно невложенные сферы.

    Returns:
    -------
    ExistenceCount
        ZERO, ONE, ONE_DOUBLE, TWO или INFINITE.

    Raises
    ------
        ContainedSites: Если какая-либо пара сфер вложена.
        PoleDegeneracy: Если сфера проходит через полюс после уменьшения радиусов.

    """
    sites = [s_i, s_j, s_k, s_a]
    for first in range(4):
        for second in range(first + 1, 4):
            check_not_contained(sites[first], sites[second])

    if len({site.radius for site in sites}) == 1:
        return _equal_radii(sites)

    pole_index = select_pole(sites)
    pole = sites[pole_index]
    others = [site for n, site in enumerate(sites) if n != pole_index]
    system = system_from_barred([checked_barred(site, pole) for site in others])
    count = count_positive_planes(system)
    logger.debug(f"Existence: полюс {pole_index}, результат {count.value}")
    return count


def _equal_radii(sites: list[Site]) -> ExistenceCount:
    rows = [[*center_of(site), ONE] for site in sites]
    if det(rows).sign("existence:flatness") is not Sign.ZERO:
        return ExistenceCount.ONE
    # центры в одной плоскости: бесконечно много сфер, только если они на одной окружности
    anchor = sites[3]
    lifted = [barred(site, anchor) for site in sites[:3]]
    matrix = [[b.x, b.y, b.z] for b in lifted]
    p_column = [b.p for b in lifted]
    minors = [det(replace_column(matrix, m, p_column)) for m in range(3)]
    if all(minor.sign("existence:cocircular") is Sign.ZERO for minor in minors):
        return ExistenceCount.INFINITE
    return ExistenceCount.ZERO


def count_positive_planes(system: TangentSystem) -> ExistenceCount:
    """
    Число касательных плоскостей с d > 0 по величинам E, P, Q, K.

    Args:
    ----
        system (TangentSystem): Система касания трёх неполярных сфер.

    Returns:
    -------
    ExistenceCount
        Количество допустимых плоскостей.

    Raises
    ------
        DegenerateConfiguration: Если образы центров коллинеарны (E = 0 и Q = 0).

    """
    e_sign = system.E.sign("existence:E")
    q_signs = [q.sign("existence:Q") for q in system.Q]
    q_zero = all(s is Sign.ZERO for s in q_signs)

    if e_sign is Sign.ZERO:
        if q_zero:
            raise DegenerateConfiguration("Existence: образы центров коллинеарны", {})
        # d однозначно задаётся первой ненулевой компонентой Q
        m = next(n for n, s in enumerate(q_signs) if s is not Sign.ZERO)
        d_sign = system.P[m].sign("existence:P") * q_signs[m]
        if d_sign is not Sign.POS:
            return ExistenceCount.ZERO
        k_sign = system.K.sign("existence:K")
        if k_sign is Sign.NEG:
            return ExistenceCount.ZERO
        return ExistenceCount.ONE_DOUBLE if k_sign is Sign.ZERO else ExistenceCount.TWO

    if q_zero:
        # линейный случай: d = (E·r̄_1 − P·b_1)/E
        first = system.rows[0]
        numerator = system.E * system.r[0] - dot(system.P, first)
        d_sign = e_sign * numerator.sign("existence:linear")
        return ExistenceCount.ONE if d_sign is Sign.POS else ExistenceCount.ZERO

    k_sign = system.K.sign("existence:K")
    pq_sign = system.PQ.sign("existence:M1")
    if k_sign is Sign.NEG:
        return ExistenceCount.ZERO
    if k_sign is Sign.ZERO:
        return ExistenceCount.ONE_DOUBLE if pq_sign is Sign.POS else ExistenceCount.ZERO
    m0_sign = (system.P2 - system.E * system.E).sign("existence:M0")
    if m0_sign is Sign.NEG:
        return ExistenceCount.ONE
    if m0_sign is Sign.POS:
        return ExistenceCount.TWO if pq_sign is Sign.POS else ExistenceCount.ZERO
    return ExistenceCount.ONE if pq_sign is Sign.POS else ExistenceCount.ZERO
