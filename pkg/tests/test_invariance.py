from collections.abc import Callable
from fractions import Fraction
from functools import cache

import pytest
from hypothesis import given, settings

from app.core.exceptions import ApolloniusException
from app.core.models import EdgeSpec, Site
from app.predicates import (
    distance,
    edge_conflict,
    existence,
    incone,
    insphere,
    order,
    shadow,
    trisector,
)
from tests.strategies import (
    Matrix3,
    grow,
    overlapping_sites,
    rotate,
    rotations,
    scale,
    scales,
    shifts,
    translate,
    translations,
)

F = Fraction

FIX_H = (Site.of(0, 0, 0, 1), Site.of(4, 0, 0, 1), Site.of(2, 4, 0, 1))
FIX_T = (Site.of(2, 0, 0, 1), Site.of(-2, 0, 0, 1), Site.of(0, 2, 0, 1), Site.of(0, 0, 2, 1))
EXTRA = (
    Site.of(2, 1, 0, F(1, 2)),
    Site.of(2, 1, 5, 1),
    Site.of(2, 1, 20, 1),
    Site.of(2, 1, -5, 1),
    Site.of(2, 20, 0, 5),
)
QUERIES = (Site.of(2, 1, 12, 1), Site.of(2, 1, 7, F(1, 2)), Site.of(0, 0, 10, 1))


def answers(move: Callable[[Site], Site]) -> tuple[str, ...]:
    h = tuple(move(s) for s in FIX_H)
    t = tuple(move(s) for s in FIX_T)
    a, b, c, left, rays = (move(s) for s in EXTRA)
    q_edge, q_entire, q_t = (move(s) for s in QUERIES)
    edge = EdgeSpec(i=h[0], j=h[1], k=h[2], l=a, m=c)
    return (
        trisector(*h).value,
        existence(*h, a).value,
        shadow(*h, rays).value,
        order(*h, a, b).token,
        order(*h, a, left).token,
        order(*h, a, rays).token,
        insphere(*t, q_t).name,
        edge_conflict(edge, q_edge).value,
        edge_conflict(edge, q_entire).value,
    )


@cache
def reference() -> tuple[str, ...]:
    return answers(lambda site: site)


def test_reference_answers() -> None:
    assert reference() == (
        "HYPERBOLIC",
        "TWO",
        "TWO_RAYS",
        "v_ikja,v_ikjb,v_ijka",
        "v_ikja,v_ijkb,v_ijka",
        "v_ijkb,v_ikja,v_ijka,v_ikjb",
        "POS",
        "RIGHT_VERTEX",
        "ENTIRE_EDGE",
    )


@settings(max_examples=15, deadline=None)
@given(rotations())
def test_rotation(matrix: Matrix3) -> None:
    assert answers(lambda site: rotate(site, matrix)) == reference()


@settings(max_examples=15, deadline=None)
@given(translations)
def test_translation(offset: tuple[Fraction, Fraction, Fraction]) -> None:
    assert answers(lambda site: translate(site, offset)) == reference()


@settings(max_examples=15, deadline=None)
@given(scales)
def test_scaling(factor: Fraction) -> None:
    assert answers(lambda site: scale(site, factor)) == reference()


@settings(max_examples=15, deadline=None)
@given(shifts)
def test_radius_shift(amount: Fraction) -> None:
    assert answers(lambda site: grow(site, amount)) == reference()


def instance_answers(sites: list[Site], move: Callable[[Site], Site]) -> tuple[str, ...]:
    """Ответы всех предикатов на одном наборе сфер; исключение даёт имя своего класса."""
    i, j, k, a, b, q = (move(s) for s in sites)
    calls: tuple[Callable[[], str], ...] = (
        lambda: incone(i, j, k).value,
        lambda: trisector(i, j, k).value,
        lambda: distance(i, j, k, a).token,
        lambda: existence(i, j, k, a).value,
        lambda: shadow(i, j, k, a).value,
        lambda: insphere(i, j, k, a, q).name,
        lambda: order(i, j, k, a, b).token,
        lambda: edge_conflict(EdgeSpec(i=i, j=j, k=k, l=a, m=b), q).value,
    )
    result = []
    for call in calls:
        try:
            result.append(call())
        except ApolloniusException as exc:
            result.append(type(exc).__name__)
    return tuple(result)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(overlapping_sites(6), rotations(), translations, scales, shifts)
def test_random_instances_are_invariant(
    sites: list[Site],
    matrix: Matrix3,
    offset: tuple[Fraction, Fraction, Fraction],
    factor: Fraction,
    amount: Fraction,
) -> None:
    expected = instance_answers(sites, lambda site: site)
    assert instance_answers(sites, lambda site: rotate(site, matrix)) == expected
    assert instance_answers(sites, lambda site: translate(site, offset)) == expected
    assert instance_answers(sites, lambda site: scale(site, factor)) == expected
    assert instance_answers(sites, lambda site: grow(site, amount)) == expected
