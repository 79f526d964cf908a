import json

import pytest

from exotic_springer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "4", "--k", "3", "--format", "text")
    assert code == 0 and out.split() == ["()||", "|()|", "||()", "|||>"]


def test_enumerate_json_round_trips(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "5", "--k", "2", "--format", "json")
    data = json.loads(out)
    assert len(data) == 10
    for d in data:
        code, again, _ = run(capsys, "enumerate", "--m", "5", "--k", "2", "--format", "json")
        assert d in json.loads(again)


def test_intersect_witness(capsys):
    code, out, _ = run(capsys, "intersect", "--a", "()||", "--b", "|()|", "--witness")
    assert code == 0
    assert out.splitlines()[0] == "nonempty"
    assert "dim: 1" in out and "witness: (p,-p,p,p)" in out


def test_intersect_json(capsys):
    code, out, _ = run(capsys, "intersect", "--a", "()||", "--b", "||()", "--witness", "--format", "json")
    data = json.loads(out)
    assert data["nonempty"] is False and data["witness"] is None and data["offending"] == [[1, 2], [3, 4]]
    code, out, _ = run(capsys, "intersect", "--a", "(())", "--b", "()()", "--orientations", "--format", "json")
    assert [o["weight"] for o in json.loads(out)["orientations"]] == ["^v^v", "v^v^"]


def test_cohomology(capsys):
    assert run(capsys, "cohomology", "--m", "4", "--k", "3", "--poincare")[1].strip() == "1 + 4q^2"
    assert run(capsys, "cohomology", "--m", "4", "--k", "2", "--mul", "X{1}", "3*X{3}")[1].strip() == "3*X{1,3}"
    out = run(capsys, "cohomology", "--m", "3", "--k", "2")[1]
    assert out.split("\n")[0] == "0  X{}"


def test_homology(capsys):
    out = run(capsys, "homology", "--lm", "(.)|.()>()>.")[1]
    assert out.strip() == "l_{4,6,7} - l_{4,6,8} - l_{5,6,7} + l_{5,6,8}"
    out = run(capsys, "homology", "--m", "4", "--k", "3", "--standard")[1]
    assert [line.split()[1] for line in out.strip().splitlines()] == [
        "|.|.|.>.",
        "()|.|.",
        "|.()|.",
        "|.|.()",
        "|.|.|.>",
    ]
    assert run(capsys, "homology", "--m", "6", "--k", "2", "--rank", "3")[1].strip() == "20"


def test_small_commands(capsys):
    assert run(capsys, "km-dim", "--m", "4", "--k", "3")[1].strip() == "14"
    assert run(capsys, "character", "--m", "4", "--k", "3", "--degree", "2", "--element", "s0")[1].strip() == "2"
    out = run(capsys, "character", "--m", "4", "--k", "3", "--degree", "2", "--element", "2 -1 3 4", "--format", "json")[1]
    assert json.loads(out)["values"] == [{"w": "2 -1 3 4", "chi": 2}]
    out = run(capsys, "constraints", "--a", "||()")[1]
    assert out.splitlines() == ["F_1 = F_0 + span(e_1)", "F_2 = F_1 + span(e_2)", "F_4 = z^-1 F_2"]
    out = run(capsys, "cells", "--m", "4", "--k", "3")[1]
    assert "cells: 1 + 4q^2" in out and out.strip().endswith("match")


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--a", "(.)|.>", "--format", "svg")
    assert code == 0 and out.startswith("<svg")
    code, out, _ = run(capsys, "render", "--a", "()||", "--glue", "|()|", "--format", "tikz")
    assert out.startswith(r"\begin{tikzpicture}")


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "enumerate", "--m", "2", "--k", "3")
    assert code == 1 and "BadParameters" in err
    code, _, err = run(capsys, "intersect", "--a", "(|)", "--b", "|||")
    assert code == 1 and "RayInsideCup" in err
    # single character values have no group-size bound
    code, out, _ = run(capsys, "character", "--m", "9", "--k", "0", "--degree", "2", "--element", "s0")
    assert code == 0 and out.strip() == "7"
    code, _, err = run(capsys, "cohomology", "--m", "3", "--k", "1", "--mul", "X{4}", "X{1}")
    assert code == 1 and "Parse" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["enumerate", "--m", "2"],
        ["enumerate", "--m", "2", "--k", "1", "--format", "svg"],
        ["render", "--a", "()", "--format", "json"],
        ["homology", "--standard"],
        ["nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_check_quick(capsys):
    code, out, _ = run(capsys, "check", "--m-max", "3")
    assert code == 0
    assert out.count("[PASS]") == 12


def test_console_script_entry_point():
    import subprocess
    import sys

    res = subprocess.run(
        [sys.executable, "-m", "exotic_springer.cli", "enumerate", "--m", "2", "--k", "1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout.split() == ["()", "|>"]
