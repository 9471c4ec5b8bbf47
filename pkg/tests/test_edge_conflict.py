from fractions import Fraction

import pytest

from app.core.exceptions import DegenerateEdgeConflict
from app.core.models import EdgeConflictKind, EdgeSpec, Site
from app.oracle import edge_conflict_numeric
from app.predicates import edge_conflict

F = Fraction

CASES = [
    (Site.of(2, 1, 12, 1), EdgeConflictKind.RIGHT_VERTEX),
    (Site.of(2, 1, 0, F(1, 4)), EdgeConflictKind.NO_CONFLICT),
    (Site.of(2, 1, 7, F(1, 2)), EdgeConflictKind.ENTIRE_EDGE),
    (Site.of(100, 100, 0, 1), EdgeConflictKind.NO_CONFLICT),
]


@pytest.mark.parametrize(("s_q", "expected"), CASES)
def test_edge_conflict(edge: EdgeSpec, s_q: Site, expected: EdgeConflictKind) -> None:
    assert edge_conflict(edge, s_q) is expected


@pytest.mark.parametrize(("s_q", "expected"), CASES)
def test_edge_conflict_matches_oracle(
    edge: EdgeSpec, s_q: Site, expected: EdgeConflictKind
) -> None:
    assert edge_conflict_numeric(edge, s_q) is expected


def test_degenerate_shadow_is_wrapped(edge: EdgeSpec) -> None:
    with pytest.raises(DegenerateEdgeConflict) as info:
        edge_conflict(edge, Site.of(2, 1, -2, 3))
    assert info.value.exit_code == 2
    assert "cause" in info.value.details
