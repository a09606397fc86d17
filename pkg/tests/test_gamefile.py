"""Game documents and result payloads: parsing, diagnostics, serialization."""

import json

import pytest

from nashvop.engine import Exactness, shared_constraint_ne
from nashvop.gamefile import (
    dumps_result,
    load_game,
    load_result,
    nash_payload,
    oracle_payload,
    parse_point,
    point_payload,
    polytope_payload,
    save_result,
)
from nashvop.polyhedra import box_rows, polytope_from_hrep, polytope_from_points
from nashvop.rationals import Q

from genrand import load_fixture_doc

BASE = {
    "schema": "nashvop-1",
    "players": [{"dim": 1, "objective": [[1, 0]]},
                {"dim": 1, "objective": [[0, 1]]}],
    "constraints": {"shared": {"A": [[1, 1]], "b": [1]}},
    "boxes": [[0, 1], [0, 1]],
}


def write_doc(tmp_path, doc, name="game.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def load_mutated(tmp_path, mutate):
    doc = json.loads(json.dumps(BASE))
    mutate(doc)
    return load_game(write_doc(tmp_path, doc))


# ---------------------------------------------------------------------------
# loading


def test_bundled_fixtures_load():
    doc = load_fixture_doc("linear_generalized")
    assert doc.dims == (2, 2)
    assert doc.n == 4
    assert doc.game is not None
    assert doc.oracle_costs is None
    assert len(doc.regions()) == 2

    ev = load_fixture_doc("odds_evens")
    assert ev.game is None  # no linear objectives, oracle only
    assert ev.oracle_costs is not None and len(ev.oracle_costs) == 2


def test_shared_document_region():
    from nashvop.polyhedra import HPolyhedron
    doc = load_fixture_doc("linear_vector_shared")
    assert isinstance(doc.regions(), HPolyhedron)
    assert doc.game.is_shared


def test_max_sense_negates_rows():
    doc = load_fixture_doc("linear_generalized")
    # the file says "sense": "max" with rows [[2,1,0,0]] / [[0,0,2,3]]
    assert doc.game.players[0].cost == ((Q(-2), Q(-1), Q(0), Q(0)),)
    assert doc.game.players[1].cost == ((Q(0), Q(0), Q(-2), Q(-3)),)


@pytest.mark.parametrize("mutate,code", [
    (lambda d: d["boxes"].__setitem__(0, [0, 0.5]), "float-literal"),
    (lambda d: d.__setitem__("schema", "other-9"), "unsupported-schema"),
    (lambda d: d.pop("boxes"), "missing-box"),
    (lambda d: d["boxes"].__setitem__(0, [2, 1]), "missing-box"),
    (lambda d: d["boxes"].__setitem__(0, [0, "x"]), "bad-rational"),
    (lambda d: d["constraints"]["shared"]["A"].__setitem__(0, [1]),
     "dimension-mismatch"),
    (lambda d: d.__setitem__("constraints", {"both": {}}), "bad-constraints"),
    (lambda d: d.__setitem__("oracle_costs", ["x[1][1", "x[2][1]"]),
     "bad-cost"),
    (lambda d: d.__setitem__("oracle_costs", ["x[1][1]"]), "bad-cost"),
    (lambda d: d["players"][0].__setitem__("dim", -1), "bad-game-file"),
    (lambda d: d["players"][0].__setitem__("sense", "maximize"),
     "bad-game-file"),
    (lambda d: d["players"][0].__setitem__("objective", 3),
     "dimension-mismatch"),
])
def test_malformed_documents_are_diagnosed(tmp_path, mutate, code):
    doc, diags = load_mutated(tmp_path, mutate)
    assert doc is None
    assert [d.code for d in diags] == [code]


def test_missing_file_is_diagnosed():
    doc, diags = load_game("/no/such/file.json")
    assert doc is None
    assert diags and diags[0].code == "bad-game-file"


def test_unparseable_json_is_diagnosed(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    doc, diags = load_game(str(path))
    assert doc is None and diags[0].code == "bad-game-file"


def test_objectives_optional_for_oracle_use(tmp_path):
    doc = json.loads(json.dumps(BASE))
    for p in doc["players"]:
        p.pop("objective")
    doc["oracle_costs"] = ["x[1][1]", "x[2][1]"]
    loaded, diags = load_game(write_doc(tmp_path, doc))
    assert diags == []
    assert loaded.game is None
    assert loaded.oracle_costs is not None


# ---------------------------------------------------------------------------
# result payloads


def test_polytope_payload_square():
    square = polytope_from_hrep(box_rows([(0, 1), (0, 1)]))
    payload = polytope_payload(square)
    assert payload["dim"] == 2
    assert payload["vertices"] == [["0", "0"], ["0", "1"], ["1", "0"],
                                   ["1", "1"]]
    assert len(payload["hrep"]["A"]) == len(payload["hrep"]["b"]) == 4


def test_polytope_payload_expands_equalities():
    seg = polytope_from_points([(0, 0), (1, 1)])
    assert any(seg.hrep.eq)
    payload = polytope_payload(seg)
    rows = {(tuple(r), b) for r, b in
            zip(payload["hrep"]["A"], payload["hrep"]["b"])}
    # the equality x1 = x2 appears as an opposite pair
    assert (("1", "-1"), "0") in rows and (("-1", "1"), "0") in rows
    assert "eq" not in payload["hrep"]


def test_point_payload():
    p = point_payload((Q(1, 2), Q(3)))
    assert p["vertices"] == [["1/2", "3"]]
    assert p["dim"] == 0


def test_nash_payload_shape():
    game = load_fixture_doc("linear_vector_shared").game
    ne = shared_constraint_ne(game)
    payload = nash_payload("shared", ne.exactness, ne.components)
    assert payload["schema"] == "nashvop-1"
    assert payload["mode"] == "shared"
    assert payload["exactness"] == "exact"
    assert len(payload["components"]) == 4
    assert "subset_components" not in payload
    assert "filter_report" not in payload
    assert payload["diagnostics"] == []


def test_oracle_payload_shape():
    payload = oracle_payload(Q(1, 4), [(Q(1, 2), Q(1, 2))])
    assert payload["exactness"] == "grid"
    assert payload["mode"] == "oracle"
    assert payload["step"] == "1/4"
    # accepted grid points are degenerate components
    assert [c["vertices"] for c in payload["components"]] == [[["1/2", "1/2"]]]
    assert all(c["dim"] == 0 for c in payload["components"])


def test_result_round_trip(tmp_path):
    game = load_fixture_doc("linear_vector_shared").game
    ne = shared_constraint_ne(game)
    payload = nash_payload("shared", Exactness.EXACT, ne.components)
    path = tmp_path / "out.json"
    save_result(payload, str(path))
    again = load_result(str(path))
    assert again == payload
    # serialization is deterministic byte-for-byte
    assert dumps_result(again) == dumps_result(payload)
    assert dumps_result(payload).endswith("\n")


def test_parse_point():
    assert parse_point("1/2, 3", 2) == (Q(1, 2), Q(3))
    # a decimal *string* is exact as written, unlike a binary float
    assert parse_point("1, 0.5", 2) == (Q(1), Q(1, 2))
    with pytest.raises(ValueError):
        parse_point("1,2,3", 2)
    with pytest.raises(ValueError):
        parse_point("1, x", 2)
