from fractions import Fraction

import numpy as np
import pytest

from app.core.exceptions import (
    DegenerateConfiguration,
    OracleFailure,
    PreconditionViolation,
    VertexNotFound,
)
from app.core.models import ShadowType, Site
from app.kernel import Sign
from app.oracle import order_numeric
from app.predicates import order, order_trace, shadow

F = Fraction

INTERVAL_A = Site.of(2, 1, 0, F(1, 2))
RIGHT_B = Site.of(2, 1, 5, 1)
RIGHT_C = Site.of(2, 1, 20, 1)
INNER_B = Site.of(2, F(1, 2), 0, F(1, 4))
LEFT_B = Site.of(2, 1, -5, 1)
TWO_RAYS_B = Site.of(2, 20, 0, 5)

CASES = [
    (INTERVAL_A, INNER_B, "v_ikja,v_ikjb,v_ijkb,v_ijka"),
    (INTERVAL_A, RIGHT_B, "v_ikja,v_ikjb,v_ijka"),
    (INTERVAL_A, RIGHT_C, "v_ikja,v_ijka,v_ikjb"),
    (RIGHT_B, RIGHT_C, "v_ikja,v_ikjb"),
    (INTERVAL_A, LEFT_B, "v_ikja,v_ijkb,v_ijka"),
    (INTERVAL_A, TWO_RAYS_B, "v_ijkb,v_ikja,v_ijka,v_ikjb"),
]


@pytest.mark.parametrize(("s_a", "s_b", "expected"), CASES)
def test_order(fix_h: tuple[Site, Site, Site], s_a: Site, s_b: Site, expected: str) -> None:
    assert order(*fix_h, s_a, s_b).token == expected


def test_order_swapped_sites(fix_h_ids: tuple[Site, Site, Site]) -> None:
    s_a = Site.of(2, 1, 0, F(1, 2), site_id="a")
    s_b = Site.of(2, 1, 5, 1, site_id="b")
    forward = order(*fix_h_ids, s_a, s_b)
    backward = order(*fix_h_ids, s_b, s_a)
    assert forward.token == "v_ikja,v_ikjb,v_ijka"
    assert backward.labels == forward.labels


def test_order_empty_shadow(fix_h: tuple[Site, Site, Site]) -> None:
    with pytest.raises(VertexNotFound):
        order(*fix_h, INTERVAL_A, Site.of(100, 100, 0, 1))


@pytest.mark.parametrize(("s_a", "s_b", "expected"), CASES)
def test_order_matches_oracle(
    fix_h: tuple[Site, Site, Site], s_a: Site, s_b: Site, expected: str
) -> None:
    numeric = order_numeric(*fix_h, s_a, s_b)
    assert ",".join(label.token for label in numeric) == expected


@pytest.mark.parametrize(
    ("s_a", "s_b", "case", "number", "signs"),
    [
        (INTERVAL_A, RIGHT_B, "C", 2, (Sign.NEG, Sign.POS, Sign.NEG)),
        (INTERVAL_A, RIGHT_C, "C", 1, (Sign.POS, Sign.POS, Sign.POS)),
        (RIGHT_B, RIGHT_C, "B", 1, (Sign.POS,)),
        (INTERVAL_A, INNER_B, "A", 6, (Sign.NEG, Sign.NEG, Sign.POS, Sign.POS)),
        (RIGHT_B, INTERVAL_A, "D", 2, (Sign.NEG, Sign.POS, Sign.NEG)),
    ],
)
def test_order_trace(
    fix_h: tuple[Site, Site, Site],
    s_a: Site,
    s_b: Site,
    case: str,
    number: int,
    signs: tuple[Sign, ...],
) -> None:
    trace = order_trace(*fix_h, s_a, s_b)
    assert (trace.case, trace.number, trace.signs) == (case, number, signs)
    assert not trace.tiebreak
    assert trace.ordering == order(*fix_h, s_a, s_b)


P, N = Sign.POS, Sign.NEG

# случай -> номер OrderCase -> (кортеж Q, порядок вершин)
ORDER_TABLES: dict[str, dict[int, tuple[tuple[Sign, ...], str]]] = {
    "A": {
        1: ((P, P, P, P), "v_ikja,v_ijka,v_ikjb,v_ijkb"),
        2: ((N, P, P, N), "v_ikja,v_ikjb,v_ijka,v_ijkb"),
        3: ((P, P, N, N), "v_ikjb,v_ikja,v_ijka,v_ijkb"),
        4: ((P, N, N, P), "v_ikjb,v_ikja,v_ijkb,v_ijka"),
        5: ((P, P, P, P), "v_ikjb,v_ijkb,v_ikja,v_ijka"),
        6: ((N, N, P, P), "v_ikja,v_ikjb,v_ijkb,v_ijka"),
    },
    "B": {
        1: ((P,), "v_ikja,v_ikjb"),
        2: ((N,), "v_ikjb,v_ikja"),
    },
    "C": {
        1: ((P, P, P), "v_ikja,v_ijka,v_ikjb"),
        2: ((N, P, N), "v_ikja,v_ikjb,v_ijka"),
        3: ((P, N, N), "v_ikjb,v_ikja,v_ijka"),
    },
}

# типы теней S_a и S_b для каждого случая
CASE_SHADOWS = {
    "A": (ShadowType.INTERVAL, ShadowType.INTERVAL),
    "B": (ShadowType.RIGHT_RAY, ShadowType.RIGHT_RAY),
    "C": (ShadowType.INTERVAL, ShadowType.RIGHT_RAY),
}


def _site_near_trisector(rng: np.random.Generator, kind: ShadowType) -> Site:
    """Сфера радиуса r < 1 рядом с прямой x=2, y=3/2; высота задаёт тип тени."""
    r = F(int(rng.integers(1, 16)), 16)
    gap = 1 - r
    dx = F(int(rng.integers(-6, 7)), 12)
    dy = F(int(rng.integers(-6, 7)), 12)
    if kind is ShadowType.INTERVAL:
        z = gap * F(int(rng.integers(-15, 16)), 16)
    else:
        z = gap + F(int(rng.integers(1, 81)), 8)
    return Site.of(2 + dx, F(3, 2) + dy, z, r)


def _contained(s_a: Site, s_b: Site) -> bool:
    squared = sum((p - q) ** 2 for p, q in zip(s_a.center, s_b.center, strict=True))
    return squared <= (s_a.radius - s_b.radius) ** 2


@pytest.mark.slow
@pytest.mark.parametrize("case", ["A", "B", "C"])
def test_order_tables_reproduced(fix_h: tuple[Site, Site, Site], case: str) -> None:
    table = ORDER_TABLES[case]
    by_token = {token: number for number, (_, token) in table.items()}
    kinds = CASE_SHADOWS[case]
    counts = dict.fromkeys(table, 0)
    rng = np.random.default_rng(20 + ord(case))

    for _ in range(40_000):
        if min(counts.values()) >= 20:
            break
        s_a, s_b = (_site_near_trisector(rng, kind) for kind in kinds)
        if _contained(s_a, s_b):
            continue
        try:
            if (shadow(*fix_h, s_a), shadow(*fix_h, s_b)) != kinds:
                continue
            trace = order_trace(*fix_h, s_a, s_b)
            numeric = order_numeric(*fix_h, s_a, s_b)
        except (DegenerateConfiguration, PreconditionViolation, OracleFailure):
            continue
        number = by_token[",".join(label.token for label in numeric)]
        signs, token = table[number]
        assert trace.case == case
        assert trace.number == number
        assert trace.signs == signs
        assert trace.ordering.token == token
        assert trace.tiebreak == (case == "A" and number in (1, 5))
        counts[number] += 1

    assert all(count >= 20 for count in counts.values()), counts
