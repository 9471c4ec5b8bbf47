import logging
from dataclasses import dataclass

from app.core.exceptions import DegenerateOrder, VertexNotFound
from app.core.models import (
    ConfigClass,
    Orientation,
    Ordering,
    OrderTrace,
    ShadowType,
    Site,
    VertexLabel,
)
from app.geometry.inversion import checked_barred, select_pole
from app.kernel.linalg import det
from app.kernel.sign import Sign
from app.predicates.insphere import insphere
from app.predicates.shadow import shadow

logger = logging.getLogger(__name__)

IJK, IKJ = Orientation.IJK, Orientation.IKJ
_POS, _NEG = Sign.POS, Sign.NEG

# вершина в символической записи: (ориентация, роль сферы)
Slot = tuple[Orientation, str]

# номер OrderCase -> порядок вершин
CASE_A_ORDERS: dict[int, tuple[Slot, ...]] = {
    1: ((IKJ, "a"), (IJK, "a"), (IKJ, "b"), (IJK, "b")),
    2: ((IKJ, "a"), (IKJ, "b"), (IJK, "a"), (IJK, "b")),
    3: ((IKJ, "b"), (IKJ, "a"), (IJK, "a"), (IJK, "b")),
    4: ((IKJ, "b"), (IKJ, "a"), (IJK, "b"), (IJK, "a")),
    5: ((IKJ, "b"), (IJK, "b"), (IKJ, "a"), (IJK, "a")),
    6: ((IKJ, "a"), (IKJ, "b"), (IJK, "b"), (IJK, "a")),
}
CASE_B_ORDERS: dict[int, tuple[Slot, ...]] = {
    1: ((IKJ, "a"), (IKJ, "b")),
    2: ((IKJ, "b"), (IKJ, "a")),
}
CASE_C_ORDERS: dict[int, tuple[Slot, ...]] = {
    1: ((IKJ, "a"), (IJK, "a"), (IKJ, "b")),
    2: ((IKJ, "a"), (IKJ, "b"), (IJK, "a")),
    3: ((IKJ, "b"), (IKJ, "a"), (IJK, "a")),
}

# кортеж Q -> номер OrderCase; (+,+,+,+) случая A разрешается вспомогательными тестами
_CASE_A: dict[tuple[Sign, ...], int] = {
    (_NEG, _POS, _POS, _NEG): 2,
    (_POS, _POS, _NEG, _NEG): 3,
    (_POS, _NEG, _NEG, _POS): 4,
    (_NEG, _NEG, _POS, _POS): 6,
}
_CASE_B: dict[tuple[Sign, ...], int] = {(_POS,): 1, (_NEG,): 2}
_CASE_C: dict[tuple[Sign, ...], int] = {
    (_POS, _POS, _POS): 1,
    (_NEG, _POS, _NEG): 2,
    (_POS, _NEG, _NEG): 3,
}


@dataclass(frozen=True, slots=True)
class _Proxy:
    """
    Сфера в классической конфигурации.

    Для неклассической тени используется эквивалентная сфера с дополнительной
    тенью: её знаки InSphere противоположны, а вершины v_ikjN и v_ijkn совпадают.
    """

    site: Site
    role: str
    shadow: ShadowType
    complement: bool


def _proxy(site: Site, role: str, kind: ShadowType) -> _Proxy:
    if kind in (ShadowType.EMPTY, ShadowType.FULL):
        raise VertexNotFound(
            f"Тень {kind.value} не содержит вершин на трисектрисе", {"site": site.id, "role": role}
        )
    if ConfigClass.of(kind) is ConfigClass.CLASSIC:
        return _Proxy(site, role, kind, complement=False)
    classic = ShadowType.RIGHT_RAY if kind is ShadowType.LEFT_RAY else ShadowType.INTERVAL
    return _Proxy(site, role, classic, complement=True)


@dataclass(frozen=True, slots=True)
class _Context:
    i: Site
    j: Site
    k: Site
    a: _Proxy
    b: _Proxy

    def label(self, slot: Slot) -> VertexLabel:
        orientation, role = slot
        proxy = self.a if role == "a" else self.b
        if proxy.complement:
            orientation = orientation.flipped
        return VertexLabel(
            orientation=orientation,
            i=self.i.label("i"),
            j=self.j.label("j"),
            k=self.k.label("k"),
            n=proxy.site.label(proxy.role),
        )

    def insphere(self, orientation: Orientation, vertex: str, query: str) -> Sign:
        """Знак InSphere для вершины эквивалентных сфер с учётом замены меток."""
        v = self.a if vertex == "a" else self.b
        q = self.a if query == "a" else self.b
        if v.complement:
            orientation = orientation.flipped
        second, third = (self.j, self.k) if orientation is IJK else (self.k, self.j)
        result = insphere(self.i, second, third, v.site, q.site)
        return -result if q.complement else result


def order_trace(s_i: Site, s_j: Site, s_k: Site, s_a: Site, s_b: Site) -> OrderTrace:
    """
    Порядок существующих вершин v_ikja, v_ijka, v_ikjb, v_ijkb вдоль трисектрисы.

    Неклассические тени сводятся к классическим заменой на эквивалентные
    сферы; далее порядок решается таблицами знаков InSphere для случаев
    A (два интервала), B (два правых луча) и C/D (смешанный).

    Args:
    ----
        s_i, s_j, s_k (Site): Сферы гиперболической трисектрисы.
        s_a, s_b (Site): Сферы, вершины которых упорядочиваются.

    Returns:
    -------
    OrderTrace
        Случай, номер OrderCase, кортеж Q и вершины в порядке возрастания
        параметра трисектрисы.

    Raises
    ------
        NotHyperbolic: Если трисектриса не гиперболическая.
        VertexNotFound: Если тень S_a или S_b равна EMPTY или FULL.
        DegenerateOrder: Нулевой решающий знак или набор знаков вне таблиц.

    """
    ctx = _Context(
        s_i,
        s_j,
        s_k,
        _proxy(s_a, "a", shadow(s_i, s_j, s_k, s_a)),
        _proxy(s_b, "b", shadow(s_i, s_j, s_k, s_b)),
    )
    kinds = (ctx.a.shadow, ctx.b.shadow)
    tiebreak = False
    if kinds == (ShadowType.INTERVAL, ShadowType.INTERVAL):
        case = "A"
        signs = _case_a_signs(ctx)
        if signs == (_POS, _POS, _POS, _POS):
            number, tiebreak = _case_a_tiebreak(ctx), True
        else:
            number = _lookup(_CASE_A, signs, case)
        slots = CASE_A_ORDERS[number]
    elif kinds == (ShadowType.RIGHT_RAY, ShadowType.RIGHT_RAY):
        case = "B"
        signs = _decisive((ctx.insphere(IKJ, "a", "b"),), case)
        number = _lookup(_CASE_B, signs, case)
        slots = CASE_B_ORDERS[number]
    elif kinds == (ShadowType.INTERVAL, ShadowType.RIGHT_RAY):
        case = "C"
        signs = _case_c_signs(ctx)
        number = _lookup(_CASE_C, signs, case)
        slots = CASE_C_ORDERS[number]
    else:
        case = "D"
        swapped = _Context(s_i, s_j, s_k, ctx.b, ctx.a)
        signs = _case_c_signs(swapped)
        number = _lookup(_CASE_C, signs, case)
        slots = tuple((o, "b" if r == "a" else "a") for o, r in CASE_C_ORDERS[number])
    ordering = Ordering(labels=tuple(ctx.label(slot) for slot in slots))
    logger.debug(
        f"Order: тени {kinds[0].value}/{kinds[1].value}, случай {case}{number}, "
        f"порядок {ordering.token}"
    )
    return OrderTrace(
        case=case, number=number, signs=signs, tiebreak=tiebreak, ordering=ordering
    )


def order(s_i: Site, s_j: Site, s_k: Site, s_a: Site, s_b: Site) -> Ordering:
    """Порядок вершин S_a и S_b вдоль трисектрисы S_i, S_j, S_k (см. order_trace)."""
    return order_trace(s_i, s_j, s_k, s_a, s_b).ordering


def _decisive(signs: tuple[Sign, ...], case: str) -> tuple[Sign, ...]:
    if Sign.ZERO in signs:
        raise DegenerateOrder(
            f"Order: нулевой знак InSphere в случае {case}",
            {"signs": [s.name for s in signs]},
        )
    return signs


def _lookup(table: dict[tuple[Sign, ...], int], signs: tuple[Sign, ...], case: str) -> int:
    number = table.get(signs)
    if number is None:
        raise DegenerateOrder(
            f"Order: набор знаков вне таблицы случая {case}", {"signs": [s.name for s in signs]}
        )
    return number


def _case_a_signs(ctx: _Context) -> tuple[Sign, ...]:
    return _decisive(
        (
            ctx.insphere(IKJ, "b", "a"),
            ctx.insphere(IJK, "b", "a"),
            ctx.insphere(IKJ, "a", "b"),
            ctx.insphere(IJK, "a", "b"),
        ),
        "A",
    )


def _case_c_signs(ctx: _Context) -> tuple[Sign, ...]:
    return _decisive(
        (
            ctx.insphere(IKJ, "b", "a"),
            ctx.insphere(IKJ, "a", "b"),
            ctx.insphere(IJK, "a", "b"),
        ),
        "C",
    )


def _case_a_tiebreak(ctx: _Context) -> int:
    """
    Интервалы S_a и S_b не пересекаются: выбор между OrderCase 1 (a ≺ b) и 5 (b ≺ a).

    Решение принимается в W-пространстве с полюсом в сфере трисектрисы
    минимального радиуса по ориентациям образов центров.
    """
    trio = (ctx.i, ctx.j, ctx.k)
    p = select_pole(trio)
    first, second, pole = trio[(p + 1) % 3], trio[(p + 2) % 3], trio[p]
    row_i = checked_barred(first, pole)
    row_j = checked_barred(second, pole)
    row_a = checked_barred(ctx.a.site, pole)
    row_b = checked_barred(ctx.b.site, pole)

    o1 = det([list(row_i.vec), list(row_j.vec), list(row_a.vec)]).sign("order:o1")
    o2 = det([list(row_i.vec), list(row_j.vec), list(row_b.vec)]).sign("order:o2")
    if ctx.a.complement:
        o1 = -o1
    if ctx.b.complement:
        o2 = -o2

    if int(o1) * int(o2) > 0:
        lifted = [[*row.vec, row.p] for row in (row_i, row_j, row_a, row_b)]
        o3 = -det(lifted).sign("order:o3")
        if ctx.a.complement != ctx.b.complement:
            o3 = -o3
        if o3 is _NEG:
            return 1
        if o3 is _POS:
            return 5
        raise DegenerateOrder("Order: центры a и b компланарны с образами трисектрисы", {})

    if o1 < o2:
        return 1
    if o1 > o2:
        return 5
    raise DegenerateOrder("Order: оба центра на разделяющей плоскости", {})
