from fractions import Fraction

import pytest
from hypothesis import given, reject, settings
from hypothesis import strategies as st

from app.core.exceptions import ContainedSites, DegenerateConfiguration, OracleFailure
from app.core.models import ExistenceCount, Site
from app.kernel import degree_audit_report, recording
from app.oracle import existence_numeric
from app.predicates import existence
from tests.strategies import overlapping_sites, separated_sites

F = Fraction


@pytest.mark.parametrize(
    ("s_a", "expected"),
    [
        (Site.of(2, 1, 5, 1), ExistenceCount.ONE),
        (Site.of(2, 1, 0, F(1, 2)), ExistenceCount.TWO),
        (Site.of(100, 100, 0, 1), ExistenceCount.ZERO),
        (Site.of(2, -1, 0, 1), ExistenceCount.INFINITE),
    ],
)
def test_existence_on_fix_h(
    fix_h: tuple[Site, Site, Site], s_a: Site, expected: ExistenceCount
) -> None:
    assert existence(*fix_h, s_a) is expected


def test_existence_equal_radii_tetrahedron(fix_t: tuple[Site, Site, Site, Site]) -> None:
    assert existence(*fix_t) is ExistenceCount.ONE


def test_existence_is_symmetric(fix_h: tuple[Site, Site, Site]) -> None:
    s_i, s_j, s_k = fix_h
    s_a = Site.of(2, 1, 0, F(1, 2))
    assert existence(s_a, s_k, s_j, s_i) is existence(s_i, s_j, s_k, s_a)


def test_existence_rejects_nested_pair(fix_h: tuple[Site, Site, Site]) -> None:
    with pytest.raises(ContainedSites):
        existence(*fix_h, Site.of(0, 0, 0, 3))


def test_existence_degree(fix_h: tuple[Site, Site, Site]) -> None:
    with recording() as log:
        existence(*fix_h, Site.of(2, 1, 0, F(1, 2)))
        existence(*fix_h, Site.of(2, 1, 12, F(3, 2)))
    assert degree_audit_report(log) <= 8


@settings(max_examples=80, deadline=None)
@given(st.one_of(separated_sites(4), overlapping_sites(4)))
def test_existence_matches_oracle(sites: list[Site]) -> None:
    try:
        count = existence(*sites)
        expected = existence_numeric(*sites)
    except (DegenerateConfiguration, OracleFailure):
        reject()
    if count in (ExistenceCount.INFINITE, ExistenceCount.ONE_DOUBLE):
        reject()
    assert count is expected
