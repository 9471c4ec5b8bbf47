import logging

from app.core.exceptions import DegenerateConfiguration, NotHyperbolic
from app.core.models import DistancePair, Site, TrisectorKind
from app.geometry.inversion import ONE, center_of, radius_of
from app.kernel.linalg import det, replace_column
from app.kernel.sign import Sign
from app.kernel.tagged import DegreeTagged, tagged_sum
from app.predicates.incone import trisector

logger = logging.getLogger(__name__)

ZERO = DegreeTagged.literal(0)


def require_hyperbolic(s_i: Site, s_j: Site, s_k: Site) -> None:
    """
    Проверка гиперболичности трисектрисы.

    Raises
    ------
        NotHyperbolic: Если трисектриса эллиптическая или параболическая.

    """
    kind = trisector(s_i, s_j, s_k)
    if kind is not TrisectorKind.HYPERBOLIC:
        raise NotHyperbolic(
            f"Трисектриса имеет тип {kind.value}", {"sites": [s_i.id, s_j.id, s_k.id]}
        )


def distance(s_i: Site, s_j: Site, s_k: Site, s_alpha: Site) -> DistancePair:
    """
    Знаки расстояний сферы S_α до двух общих касательных плоскостей S_i, S_j, S_k.

    Плоскость Π = {a·x + b·y + c·z + d = 0} с единичной нормалью оставляет
    центры i, j, k на положительной стороне. Подставляя в систему касания
    строку S_α с правой частью r_α + ε, получаем квадратное уравнение
    Λ(ε) = Λ₂ε² + Λ₁ε + Λ₀ на отклонение ε = δ(S_α, Π), корни которого
    отвечают Π⁻ и Π⁺. Π⁺ обращена нормалью против n = (C_j − C_i) × (C_k − C_i).

    Args:
    ----
        s_i, s_j, s_k (Site): Сферы гиперболической трисектрисы.
        s_alpha (Site): Сфера, расстояние до которой оценивается.

    Returns:
    -------
    DistancePair
        (sign δ(S_α, Π⁻), sign δ(S_α, Π⁺)).

    Raises
    ------
        NotHyperbolic: Если трисектриса не гиперболическая.

    """
    require_hyperbolic(s_i, s_j, s_k)

    rows = []
    rhs = []
    for site in (s_i, s_j, s_k, s_alpha):
        x, y, z = center_of(site)
        rows.append([x, y, z, ONE])
        rhs.append(radius_of(site))
    unit = [ZERO, ZERO, ZERO, ONE]

    # числители Крамера для a, b, c, d при ε⁰ и ε¹
    alpha0 = [det(replace_column(rows, m, rhs)) for m in range(4)]
    alpha1 = [det(replace_column(rows, m, unit)) for m in range(4)]
    d_main = det(rows)

    d_sign = d_main.sign("distance:Dxyz")
    if d_sign is Sign.ZERO:
        return _coplanar_case(alpha0, alpha1)

    lambda1 = 2 * tagged_sum([alpha0[m] * alpha1[m] for m in range(3)])
    lambda0 = tagged_sum([alpha0[m] * alpha0[m] for m in range(3)]) - d_main * d_main
    l1 = lambda1.sign("distance:Lambda1")
    l0 = lambda0.sign("distance:Lambda0")
    logger.debug(f"Distance: sign(D)={d_sign.name}, sign(Λ₁)={l1.name}, sign(Λ₀)={l0.name}")

    # sign(D) < 0: центр S_α на стороне +n, там δ⁺ < δ⁻
    plus_is_smaller = d_sign is Sign.NEG
    if l0 is Sign.POS:
        if l1 is Sign.ZERO:
            raise DegenerateConfiguration(
                "Distance: комплексные корни Λ(ε)", {"alpha": s_alpha.id}
            )
        both = -l1
        return DistancePair(sigma_minus=both, sigma_plus=both)
    if l0 is Sign.NEG:
        smaller, larger = Sign.NEG, Sign.POS
    else:
        other = -l1
        if other is Sign.NEG:
            smaller, larger = Sign.NEG, Sign.ZERO
        else:
            smaller, larger = Sign.ZERO, other
    if plus_is_smaller:
        return DistancePair(sigma_minus=larger, sigma_plus=smaller)
    return DistancePair(sigma_minus=smaller, sigma_plus=larger)


def _coplanar_case(alpha0: list[DegreeTagged], alpha1: list[DegreeTagged]) -> DistancePair:
    # центры компланарны: обе плоскости дают одно и то же ε = −α₀/α₁
    for m in (3, 2, 1, 0):
        a1 = alpha1[m].sign(f"distance:alpha1[{m}]")
        if a1 is not Sign.ZERO:
            eps = -(alpha0[m].sign(f"distance:alpha0[{m}]") * a1)
            return DistancePair(sigma_minus=eps, sigma_plus=eps)
    raise DegenerateConfiguration("Distance: центры трёх сфер коллинеарны", {})
