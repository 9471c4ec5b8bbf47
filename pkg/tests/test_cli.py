from pathlib import Path

import pytest

from app.cli import parse_scene
from app.main import main


@pytest.fixture
def scene_path(tmp_path: Path, scene_text: str) -> Path:
    path = tmp_path / "scene.txt"
    path.write_text(scene_text, encoding="utf-8")
    return path


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, list[str]]:
    code = main(list(argv))
    return code, capsys.readouterr().out.splitlines()


def test_eval_trisector(capsys: pytest.CaptureFixture[str], scene_path: Path) -> None:
    code, out = run(capsys, "eval", "trisector", "i", "j", "k", "--scene", str(scene_path))
    assert code == 0
    assert out == ["HYPERBOLIC"]


def test_eval_with_audit_and_oracle(capsys: pytest.CaptureFixture[str], scene_path: Path) -> None:
    code, out = run(
        capsys,
        "eval",
        "trisector",
        "i",
        "j",
        "k",
        "--scene",
        str(scene_path),
        "--audit",
        "--compare-oracle",
    )
    assert code == 0
    assert out == ["HYPERBOLIC", "max_degree=4", "oracle=HYPERBOLIC"]


@pytest.mark.parametrize(
    ("argv", "expected"),
    [
        (["shadow", "i", "j", "k", "a"], "INTERVAL"),
        (["distance", "i", "j", "k", "b"], "POS,NEG"),
        (["existence", "i", "j", "k", "e1"], "INFINITE"),
        (["order", "i", "j", "k", "a", "b"], "v_ikja,v_ikjb,v_ijka"),
        (["edge-conflict", "i", "j", "k", "a", "c", "q"], "RIGHT_VERTEX"),
        (["classify", "i", "j", "k", "a"], "IJK,IKJ"),
        (["classify", "i", "j", "k", "far"], "NONE"),
    ],
)
def test_eval_predicates(
    capsys: pytest.CaptureFixture[str], scene_path: Path, argv: list[str], expected: str
) -> None:
    code, out = run(capsys, "eval", *argv, "--scene", str(scene_path))
    assert code == 0
    assert out == [expected]


@pytest.mark.parametrize(
    ("argv", "code"),
    [
        (["eval", "shadow", "i", "j", "k", "touch"], 2),
        (["eval", "incone", "a", "touch", "i"], 3),
        (["eval", "trisector", "i", "j", "nobody"], 4),
        (["eval", "trisector", "i", "j"], 4),
        (["eval", "nosuch", "i", "j", "k"], 4),
    ],
)
def test_eval_exit_codes(
    capsys: pytest.CaptureFixture[str], scene_path: Path, argv: list[str], code: int
) -> None:
    result, out = run(capsys, *argv, "--scene", str(scene_path))
    assert result == code
    assert out == []


def test_missing_scene_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    code, _ = run(capsys, "eval", "trisector", "i", "j", "k", "--scene", str(tmp_path / "no"))
    assert code == 4


def test_broken_scene_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("site i 0 0 0 1\nsite j 1 2\n", encoding="utf-8")
    code, _ = run(capsys, "eval", "trisector", "i", "j", "k", "--scene", str(path))
    assert code == 4


def test_fuzz_zero_instances(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "fuzz", "shadow", "--count", "0", "--seed", "1")
    assert code == 0
    assert out == ["compared 0, agreed 0, discarded 0, degenerate 0"]


def test_fuzz_negative_count(capsys: pytest.CaptureFixture[str]) -> None:
    code, _ = run(capsys, "fuzz", "shadow", "--count", "-1")
    assert code == 4


def test_gen_is_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    code, first = run(capsys, "gen", "--seed", "7", "--count", "5")
    _, second = run(capsys, "gen", "--seed", "7", "--count", "5")
    _, other = run(capsys, "gen", "--seed", "8", "--count", "5")
    assert code == 0
    assert first == second
    assert first != other
    scene = parse_scene("\n".join(first))
    assert list(scene.sites) == ["s0", "s1", "s2", "s3", "s4"]


def test_gen_default_count(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "gen", "--seed", "3")
    assert code == 0
    assert len(out) == 16


@pytest.mark.slow
def test_degree_audit(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "degree-audit", "--seed", "5", "--count", "2")
    assert code == 0
    names = [line.split()[0] for line in out]
    assert names == [
        "incone",
        "trisector",
        "distance",
        "existence",
        "shadow",
        "insphere",
        "classify",
        "order",
        "edge-conflict",
    ]
    assert out[1].startswith("trisector max_degree=")
    assert all(" target=" in line for line in out)
