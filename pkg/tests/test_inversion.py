from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from app.core.exceptions import ContainedSites, PoleDegeneracy, ShapeMismatch
from app.core.models import DetKind, DetQuery, Site
from app.geometry import (
    barred,
    check_not_contained,
    det,
    invert_point,
    orient3d,
    reduce_and_invert,
    select_pole,
)
from app.kernel import Sign
from tests.strategies import overlapping_sites, separated_sites, translations

F = Fraction


def test_reduce_and_invert_fix_h(fix_h: tuple[Site, Site, Site]) -> None:
    inverted = reduce_and_invert(list(fix_h), pole=2)
    assert len(inverted) == 2
    first, second = inverted
    assert (first.xbar.value, first.ybar.value, first.zbar.value) == (-2, -4, 0)
    assert first.rbar.value == 0
    assert first.pbar == 20
    assert (first.u, first.v, first.w, first.rho) == (F(-1, 10), F(-1, 5), 0, 0)
    assert (second.u, second.v, second.w, second.rho) == (F(1, 10), F(-1, 5), 0, 0)
    assert second.pbar == 20
    assert first.pbar_tagged.degree == 2


def test_reduce_and_invert_accepts_pole_id(fix_h_ids: tuple[Site, Site, Site]) -> None:
    inverted = reduce_and_invert(list(fix_h_ids), pole="k")
    assert [site.source for site in inverted] == ["i", "j"]
    assert all(site.pole == "k" for site in inverted)


def test_identical_twin_is_pole_degeneracy() -> None:
    pole = Site.of(1, 2, 3, 1)
    twin = Site.of(1, 2, 3, 1)
    with pytest.raises(PoleDegeneracy):
        reduce_and_invert([pole, twin], pole=0)


def test_contained_site_rejected() -> None:
    big = Site.of(0, 0, 0, 5)
    small = Site.of(1, 0, 0, 1)
    with pytest.raises(ContainedSites):
        check_not_contained(big, small)
    with pytest.raises(ContainedSites):
        reduce_and_invert([small, big], pole=0)


def test_select_pole_prefers_first_minimum() -> None:
    sites = [Site.of(0, 0, 0, 2), Site.of(5, 0, 0, 1), Site.of(9, 0, 0, 1)]
    assert select_pole(sites) == 1


def flat(x: int, y: int) -> Site:
    return Site.of(x, y, 0, 0)


def test_d2_unit_triangle() -> None:
    sites = (flat(0, 0), flat(1, 0), flat(0, 1))
    query = DetQuery(kind=DetKind.D2, columns=("x", "y"), sites=sites)
    assert det(query).value == 1


def test_d2_collinear_points() -> None:
    sites = (flat(0, 0), flat(1, 1), flat(2, 2))
    query = DetQuery(kind=DetKind.D2, columns=("x", "y"), sites=sites)
    assert det(query).value == 0


def test_e3_needs_three_rows_besides_pole(fix_h: tuple[Site, Site, Site]) -> None:
    query = DetQuery(kind=DetKind.E3, columns=("x", "y", "z"), sites=fix_h, pole=fix_h[2])
    with pytest.raises(ShapeMismatch):
        det(query)


def test_wrong_column_count() -> None:
    sites = (flat(0, 0), flat(1, 0), flat(0, 1))
    query = DetQuery(kind=DetKind.D3, columns=("x", "y"), sites=sites)
    with pytest.raises(ShapeMismatch):
        det(query)


def test_e_forms_have_expected_degree(fix_t: tuple[Site, Site, Site, Site]) -> None:
    pole = Site.of(0, 0, -5, F(1, 2))
    e4 = DetQuery(kind=DetKind.E4, columns=("x", "y", "z", "p"), sites=(*fix_t, pole), pole=pole)
    e3 = DetQuery(kind=DetKind.E3, columns=("x", "y", "z"), sites=(*fix_t[:3], pole), pole=pole)
    assert det(e4).degree == 5
    assert det(e3).degree == 3


def symbolic_e_form(columns: tuple[str, ...]) -> tuple[sympy.Expr, list[sympy.Symbol]]:
    """Определитель E-формы над символьными сферами: строки отнесены к сфере-полюсу."""
    names = " ".join(f"x{n} y{n} z{n} r{n}" for n in range(len(columns) + 1))
    symbols = list(sympy.symbols(names))
    x0, y0, z0, r0 = symbols[:4]
    rows = []
    for n in range(1, len(columns) + 1):
        x, y, z, r = symbols[4 * n : 4 * n + 4]
        reduced = {"x": x - x0, "y": y - y0, "z": z - z0, "r": r - r0}
        reduced["p"] = sum(reduced[c] ** 2 for c in "xyz") - reduced["r"] ** 2
        rows.append([reduced[c] for c in columns])
    return sympy.Matrix(rows).det(), symbols


@pytest.mark.parametrize(
    ("kind", "columns"),
    [
        (DetKind.E3, ("x", "y", "z")),
        (DetKind.E3, ("x", "y", "r")),
        (DetKind.E4, ("x", "y", "z", "p")),
    ],
)
def test_e_form_degree_matches_symbolic(
    fix_t: tuple[Site, Site, Site, Site], kind: DetKind, columns: tuple[str, ...]
) -> None:
    pole = Site.of(0, 0, -5, F(1, 2))
    rows = fix_t[: len(columns)]
    exact = det(DetQuery(kind=kind, columns=columns, sites=(*rows, pole), pole=pole))
    symbolic, symbols = symbolic_e_form(columns)
    assert sympy.Poly(sympy.expand(symbolic), *symbols).total_degree() == exact.degree
    values = [v for site in (pole, *rows) for v in (*site.center, site.radius)]
    point = zip(symbols, values, strict=True)
    at_point = symbolic.subs({s: sympy.Rational(v.numerator, v.denominator) for s, v in point})
    assert at_point == sympy.Rational(exact.value.numerator, exact.value.denominator)


@pytest.mark.parametrize(
    ("p", "expected"),
    [((0, 0, 1), Sign.POS), ((1, 1, 0), Sign.ZERO), ((0, 0, -1), Sign.NEG)],
)
def test_orient3d(p: tuple[int, int, int], expected: Sign) -> None:
    assert orient3d(p, (0, 0, 0), (1, 0, 0), (0, 1, 0)) is expected


@given(translations, translations)
def test_invert_point_is_involution(
    point: tuple[Fraction, Fraction, Fraction], pole: tuple[Fraction, Fraction, Fraction]
) -> None:
    assume(point != pole)
    assert invert_point(invert_point(point, pole), pole) == point


@given(st.one_of(separated_sites(4), overlapping_sites(4)))
def test_inverted_orientation_matches_original(sites: list[Site]) -> None:
    s_n, s_i, s_j, s_k = sites
    images = reduce_and_invert([s_n, s_i, s_j, s_k], pole=3)
    c_n, c_i, c_j = ((im.u, im.v, im.w) for im in images)
    origin = (F(0), F(0), F(0))
    expected = orient3d(s_n.center, s_i.center, s_j.center, s_k.center)
    assert orient3d(c_n, c_i, c_j, origin) is expected


@given(separated_sites(4))
def test_inverted_minor_sign_matches_e_form(sites: list[Site]) -> None:
    pole = sites[3]
    inverted = DetQuery(
        kind=DetKind.D3, columns=("u", "v", "rho"), sites=tuple(sites[:3]), pole=pole
    )
    e_form = DetQuery(kind=DetKind.E3, columns=("x", "y", "r"), sites=tuple(sites), pole=pole)
    assert det(inverted).sign() is det(e_form).sign()


def test_barred_power_is_degree_two(fix_h: tuple[Site, Site, Site]) -> None:
    row = barred(fix_h[0], fix_h[1])
    assert row.p.degree == 2
    assert row.p.value == 16
