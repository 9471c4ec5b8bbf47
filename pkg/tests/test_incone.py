from fractions import Fraction

import pytest
from hypothesis import given, reject
from hypothesis import strategies as st

from app.core.exceptions import ContainedSites, DegenerateConfiguration
from app.core.models import InConeKind, Site, TrisectorKind
from app.kernel import degree_audit_report, recording
from app.predicates import incone, trisector
from tests.strategies import overlapping_sites, separated_sites

F = Fraction

CONE_A = Site.of(0, 0, 0, 1)
CONE_B = Site.of(4, 0, 0, 1)


@pytest.mark.parametrize(
    ("s_c", "expected"),
    [
        (Site.of(2, 0, 0, F(1, 2)), InConeKind.INSIDE),
        (Site.of(2, 3, 0, 1), InConeKind.OUTSIDE),
        (Site.of(2, F(1, 2), 0, F(1, 2)), InConeKind.ONE_POINT_TOUCH),
    ],
)
def test_incone_cylinder(s_c: Site, expected: InConeKind) -> None:
    assert incone(CONE_A, CONE_B, s_c) is expected


def test_incone_circle_touch_on_collinear_centers() -> None:
    s_a, s_b, s_c = Site.of(0, 0, 0, 1), Site.of(4, 0, 0, 2), Site.of(8, 0, 0, 3)
    assert incone(s_a, s_b, s_c) is InConeKind.CIRCLE_TOUCH


def test_incone_behind_apex_is_outside() -> None:
    s_a, s_b = Site.of(0, 0, 0, 1), Site.of(4, 0, 0, 2)
    assert incone(s_a, s_b, Site.of(-10, 0, 0, F(1, 2))) is InConeKind.OUTSIDE


def test_incone_rejects_nested_cone() -> None:
    with pytest.raises(ContainedSites):
        incone(Site.of(0, 0, 0, 5), Site.of(1, 0, 0, 1), Site.of(20, 0, 0, 1))


def test_trisector_hyperbolic(fix_h: tuple[Site, Site, Site]) -> None:
    assert trisector(*fix_h) is TrisectorKind.HYPERBOLIC


@pytest.mark.parametrize(
    ("s_k", "expected"),
    [
        (Site.of(2, F(1, 2), 0, F(1, 4)), TrisectorKind.ELLIPTIC),
        (Site.of(2, F(3, 4), 0, F(1, 4)), TrisectorKind.PARABOLIC),
    ],
)
def test_trisector_inside_cylinder(s_k: Site, expected: TrisectorKind) -> None:
    assert trisector(CONE_A, CONE_B, s_k) is expected


def test_incone_degree(fix_h: tuple[Site, Site, Site]) -> None:
    with recording() as log:
        trisector(*fix_h)
        incone(CONE_A, CONE_B, Site.of(2, F(1, 2), 0, F(1, 2)))
        incone(Site.of(0, 0, 0, 1), Site.of(4, 0, 0, 2), Site.of(8, 0, 0, 3))
    assert degree_audit_report(log) <= 4


@given(st.one_of(separated_sites(3), overlapping_sites(3)))
def test_incone_symmetric_in_cone_sites(sites: list[Site]) -> None:
    s_a, s_b, s_c = sites
    try:
        forward = incone(s_a, s_b, s_c)
        backward = incone(s_b, s_a, s_c)
    except DegenerateConfiguration:
        reject()
    assert forward is backward


@given(st.one_of(separated_sites(3), overlapping_sites(3)))
def test_trisector_ignores_argument_order(sites: list[Site]) -> None:
    s_i, s_j, s_k = sites
    try:
        kinds = {
            trisector(s_i, s_j, s_k),
            trisector(s_j, s_k, s_i),
            trisector(s_k, s_i, s_j),
            trisector(s_j, s_i, s_k),
        }
    except DegenerateConfiguration:
        reject()
    assert len(kinds) == 1
