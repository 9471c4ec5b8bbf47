import logging
from fractions import Fraction

from pydantic import ValidationError

from app.core.exceptions import DuplicateId, NegativeRadius, ParseError
from app.core.models import Scene, Site, to_fraction

logger = logging.getLogger(__name__)

_KEYWORD = "site"
_FIELDS = 6


def _number(token: str, line_no: int) -> Fraction:
    try:
        return to_fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(
            f"Строка {line_no}: некорректное число {token!r}", {"line": line_no, "token": token}
        ) from exc


def parse_scene(text: str) -> Scene:
    """
    Разбор файла сцены.

    Каждая значимая строка имеет вид ``site <id> <x> <y> <z> <r>``. Числа
    записываются целыми, дробями p/q или конечными десятичными и переводятся
    в рациональные без двоичного округления. ``#`` начинает комментарий,
    пустые строки пропускаются.

    Args:
    ----
        text (str): Содержимое файла сцены.

    Returns:
    -------
    Scene
        Сферы сцены в порядке появления.

    Raises
    ------
        ParseError: Нарушена грамматика строки (номер строки в details["line"]).
        DuplicateId: Идентификатор уже встречался.
        NegativeRadius: Радиус меньше нуля.

    """
    sites: dict[str, Site] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != _KEYWORD or len(tokens) != _FIELDS:
            raise ParseError(
                f"Строка {line_no}: ожидалось 'site <id> <x> <y> <z> <r>'",
                {"line": line_no, "text": raw},
            )
        site_id = tokens[1]
        if site_id in sites:
            raise DuplicateId(
                f"Строка {line_no}: повторный идентификатор {site_id}",
                {"line": line_no, "id": site_id},
            )
        x, y, z, r = (_number(token, line_no) for token in tokens[2:])
        if r < 0:
            raise NegativeRadius(
                f"Строка {line_no}: отрицательный радиус сферы {site_id}",
                {"line": line_no, "id": site_id, "radius": str(r)},
            )
        try:
            sites[site_id] = Site.of(x, y, z, r, site_id=site_id)
        except ValidationError as exc:
            raise ParseError(
                f"Строка {line_no}: некорректная сфера {site_id}",
                {"line": line_no, "errors": exc.errors(include_url=False)},
            ) from exc
    logger.debug(f"Сцена разобрана: {len(sites)} сфер")
    return Scene(sites=sites)


def serialize_scene(scene: Scene) -> str:
    """Текст файла сцены; повторный разбор даёт ту же сцену."""
    lines = []
    for site in scene.sites.values():
        numbers = " ".join(str(value) for value in (*site.center, site.radius))
        lines.append(f"{_KEYWORD} {site.id} {numbers}")
    return "\n".join(lines) + ("\n" if lines else "")
