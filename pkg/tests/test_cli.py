"""Command-line interface: solve, best-response, oracle, check.

Solve/oracle outputs are compared byte-for-byte against the frozen result
files bundled under games/expected/; exit codes follow the documented
contract (0 success, 2 usage or validation, 3 rejected check).
"""

import json
from pathlib import Path

import pytest

from nashvop.cli import main

ROOT = Path(__file__).resolve().parent.parent
GAMES = ROOT / "games"
EXPECTED = ROOT / "games" / "expected"


def game(name):
    return str(GAMES / f"{name}.json")


def run(argv):
    """Invoke the CLI; argparse usage errors surface as SystemExit(2)."""
    try:
        return main(argv)
    except SystemExit as e:
        return e.code


def run_solve(tmp_path, name, mode, *extra):
    out = tmp_path / "result.json"
    code = main(["solve", "--game", game(name), "--mode", mode,
                 "--out", str(out), *extra])
    return code, out


@pytest.mark.parametrize("name,mode", [
    ("linear_generalized", "intersection"),
    ("linear_generalized", "union"),
    ("linear_generalized", "generalized"),
    ("linear_generalized_tight", "union"),
    ("linear_generalized_tight", "generalized"),
    ("linear_vector_shared", "shared"),
])
def test_solve_matches_frozen_results(tmp_path, name, mode):
    code, out = run_solve(tmp_path, name, mode)
    assert code == 0
    frozen = (EXPECTED / f"{name}.{mode}.json").read_bytes()
    assert out.read_bytes() == frozen


def test_solve_summary_lines(tmp_path, capsys):
    code, _ = run_solve(tmp_path, "linear_generalized", "generalized")
    assert code == 0
    stdout = capsys.readouterr().out
    assert "exact" in stdout
    assert "result written to" in stdout
    assert "filter removed 4 piece(s)" in stdout


def test_solve_verbose_prints_payload(capsys):
    code = main(["solve", "--game", game("linear_vector_shared"),
                 "--mode", "shared", "-v"])
    assert code == 0
    stdout = capsys.readouterr().out
    start = stdout.index("{")
    payload = json.loads(stdout[start:])
    assert payload["schema"] == "nashvop-1"
    assert len(payload["components"]) == 4


def test_solve_shared_mode_requires_shared_game(capsys):
    assert main(["solve", "--game", game("linear_generalized"),
                 "--mode", "shared"]) == 2
    assert "not-shared" in capsys.readouterr().err


def test_solve_vector_generalized_reports_bounds(tmp_path, capsys):
    out = tmp_path / "v.json"
    # a vector game with per-player constraints: the filter step is not
    # available, so both bounds are reported instead
    doc = json.loads(Path(game("linear_vector_shared")).read_text())
    shared = doc["constraints"].pop("shared")
    doc["constraints"]["per_player"] = [shared, shared]
    vg = tmp_path / "vector_coupled.json"
    vg.write_text(json.dumps(doc))
    code = main(["solve", "--game", str(vg), "--mode", "generalized",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["exactness"] == "superset"
    assert "subset_components" in payload
    assert any("vector" in d["code"] for d in payload["diagnostics"])


def test_solve_rejects_missing_or_malformed_files(tmp_path, capsys):
    assert main(["solve", "--game", str(tmp_path / "nope.json"),
                 "--mode", "shared"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "wrong"}')
    assert main(["solve", "--game", str(bad), "--mode", "shared"]) == 2
    err = capsys.readouterr().err
    assert "diagnostic" in err


def test_solve_requires_objectives(capsys):
    assert main(["solve", "--game", game("odds_evens"),
                 "--mode", "shared"]) == 2
    assert "no-objective" in capsys.readouterr().err


def test_best_response_summary(capsys):
    code = main(["best-response", "--game", game("linear_generalized"),
                 "--player", "1"])
    assert code == 0
    stdout = capsys.readouterr().out
    assert "faces: 3" in stdout
    assert "extremal points: 7" in stdout


def test_best_response_player_out_of_range(capsys):
    assert main(["best-response", "--game", game("linear_generalized"),
                 "--player", "0"]) == 2
    assert main(["best-response", "--game", game("linear_generalized"),
                 "--player", "3"]) == 2


def test_oracle_matches_frozen_results(tmp_path):
    for name in ("odds_evens", "odds_evens_matching"):
        out = tmp_path / f"{name}.json"
        code = main(["oracle", "--game", game(name), "--step", "1/4",
                     "--out", str(out)])
        assert code == 0
        frozen = (EXPECTED / f"{name}.oracle.json").read_bytes()
        assert out.read_bytes() == frozen


def test_oracle_rejects_bad_step(capsys):
    assert run(["oracle", "--game", game("odds_evens"),
                "--step", "0"]) == 2
    assert run(["oracle", "--game", game("odds_evens"),
                "--step", "-1/2"]) == 2
    # a step that does not divide a box width is a usage error too
    assert run(["oracle", "--game", game("linear_generalized"),
                "--step", "1"]) == 2


def test_oracle_derives_costs_from_linear_objectives(tmp_path):
    doc = {
        "schema": "nashvop-1",
        "players": [{"dim": 1, "objective": [[1, 0]]},
                    {"dim": 1, "objective": [[0, 1]]}],
        "constraints": {"shared": {"A": [[1, 1]], "b": [1]}},
        "boxes": [[0, 1], [0, 1]],
    }
    path = tmp_path / "own_coordinates.json"
    path.write_text(json.dumps(doc))
    out = tmp_path / "o.json"
    code = main(["oracle", "--game", str(path), "--step", "1/2",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["mode"] == "oracle"
    assert [c["vertices"] for c in payload["components"]] == [[["0", "0"]]]


def test_check_equilibrium_points(capsys):
    assert main(["check", "--game", game("linear_generalized"),
                 "--point", "1,2,1,2"]) == 0
    assert "EQUILIBRIUM" in capsys.readouterr().out
    assert main(["check", "--game", game("linear_vector_shared"),
                 "--point", "0,5/2,3/2,0"]) == 0


def test_check_rejects_improvable_point(capsys):
    # midpoint of the second superset face: feasible, removed by player 2
    code = main(["check", "--game", game("linear_generalized"),
                 "--point", "0,9/4,1/16,23/4"])
    assert code == 3
    out = capsys.readouterr().out
    assert "NOT an equilibrium" in out
    assert "player 2 improves" in out


def test_check_rejects_infeasible_point(capsys):
    code = main(["check", "--game", game("linear_generalized"),
                 "--point", "5,5/2,3/2,6"])
    assert code == 3
    assert "INFEASIBLE" in capsys.readouterr().out


def test_check_point_arity_is_usage_error(capsys):
    assert main(["check", "--game", game("linear_generalized"),
                 "--point", "1,2"]) == 2


def test_check_nonlinear_needs_step(capsys):
    assert main(["check", "--game", game("odds_evens"),
                 "--point", "1/2,1/2"]) == 2
    assert main(["check", "--game", game("odds_evens"),
                 "--point", "1/2,1/2", "--step", "1/4"]) == 0
    code = main(["check", "--game", game("odds_evens"),
                 "--point", "1/4,1/4", "--step", "1/8"])
    assert code == 3
    assert "improves" in capsys.readouterr().out


def test_results_are_deterministic(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for target in (a, b):
        assert main(["solve", "--game", game("linear_generalized"),
                     "--mode", "generalized", "--out", str(target)]) == 0
    assert a.read_bytes() == b.read_bytes()
