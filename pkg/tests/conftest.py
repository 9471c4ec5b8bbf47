from fractions import Fraction

import pytest

from app.core.models import EdgeSpec, Site

HALF = Fraction(1, 2)


@pytest.fixture
def fix_h() -> tuple[Site, Site, Site]:
    """Три единичные сферы с центрами в плоскости z = 0; трисектриса есть прямая x=2, y=3/2."""
    return (Site.of(0, 0, 0, 1), Site.of(4, 0, 0, 1), Site.of(2, 4, 0, 1))


@pytest.fixture
def fix_h_ids() -> tuple[Site, Site, Site]:
    return (
        Site.of(0, 0, 0, 1, site_id="i"),
        Site.of(4, 0, 0, 1, site_id="j"),
        Site.of(2, 4, 0, 1, site_id="k"),
    )


@pytest.fixture
def fix_t() -> tuple[Site, Site, Site, Site]:
    """Единичные сферы i, j, k, a; сфера Аполлония v_ijka имеет центр 0 и радиус 1."""
    return (
        Site.of(2, 0, 0, 1),
        Site.of(-2, 0, 0, 1),
        Site.of(0, 2, 0, 1),
        Site.of(0, 0, 2, 1),
    )


@pytest.fixture
def edge(fix_h: tuple[Site, Site, Site]) -> EdgeSpec:
    """Ребро между v_ijkl (z ≈ 5.7282) и v_ikjm (z = 197/20) на трисектрисе FIX-H."""
    s_i, s_j, s_k = fix_h
    return EdgeSpec(
        i=s_i, j=s_j, k=s_k, l=Site.of(2, 1, 0, HALF), m=Site.of(2, 1, 20, 1)
    )


@pytest.fixture
def scene_text() -> str:
    return (
        "# FIX-H и дополнительные сферы\n"
        "site i 0 0 0 1\n"
        "site j 4 0 0 1\n"
        "site k 2 4 0 1\n"
        "\n"
        "site a 2 1 0 0.5   # интервал\n"
        "site b 2 1 5 1\n"
        "site c 2 1 20 1\n"
        "site far 100 100 0 1\n"
        "site q 2 1 12 1\n"
        "site touch 2 1 -2 3\n"
        "site e1 2 -1 0 1\n"
    )
