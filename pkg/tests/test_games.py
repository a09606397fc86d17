"""Game model: construction, validation, stacked maps, feasible sets."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nashvop.errors import DimensionMismatch, EmptySet
from nashvop.games import (
    PerPlayerConstraints,
    Player,
    SharedConstraints,
    constraint_system,
    feasible_set,
    intersection_system,
    make_game,
    stacked_objective,
    validate,
)
from nashvop.polyhedra import HPolyhedron, box_rows, is_subset
from nashvop.rationals import Q

from genrand import (
    load_fixture,
    random_generalized_game,
    random_shared_game,
)

seeds = st.integers(0, 10**9)


def test_fixture_validates_cleanly():
    assert validate(load_fixture("linear_generalized")) == []
    assert validate(load_fixture("linear_vector_shared")) == []


def test_empty_intersection_is_diagnosed():
    r1 = box_rows([(0, 1), (0, 1)])
    r2 = HPolyhedron.from_rows([[-1, 0]], [-2])  # x11 >= 2, off the box
    game = make_game(
        [Player.make(1, [[1, 0]]), Player.make(1, [[0, 1]])],
        PerPlayerConstraints((r1, r2)), [(0, 1), (0, 1)])
    codes = {d.code for d in validate(game)}
    assert "empty-intersection" in codes


def test_wrong_cost_width_is_diagnosed():
    game = make_game(
        [Player.make(1, [[1, 0, 0]]), Player.make(1, [[0, 1]])],
        SharedConstraints(box_rows([(0, 1), (0, 1)])), [(0, 1), (0, 1)])
    codes = {d.code for d in validate(game)}
    assert "dimension-mismatch" in codes


def test_stacked_objective_scalar():
    game = load_fixture("linear_generalized")
    b = stacked_objective(game)
    assert [list(map(int, r)) for r in b] == [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1],
        [-2, -1, 0, 0], [0, 0, -2, -3]]


def test_stacked_objective_vector():
    game = load_fixture("linear_vector_shared")
    b = stacked_objective(game)
    assert len(b) == 8 and all(len(r) == 4 for r in b)
    assert [list(map(int, r)) for r in b[4:]] == [
        [-2, 0, 0, 0], [0, -1, 0, 0], [0, 0, -2, 0], [0, 0, 0, -3]]


def test_single_player_game():
    game = make_game([Player.make(1, [[1]])],
                     SharedConstraints(box_rows([(0, 1)])), [(0, 1)])
    assert validate(game) == []
    assert [list(map(int, r)) for r in stacked_objective(game)] == [[1], [1]]


def test_feasible_set_selectors():
    game = load_fixture("linear_generalized")
    inter = feasible_set(game, "intersection")
    assert (Q(1), Q(2), Q(1), Q(2)) in inter.vertices
    per_player = [feasible_set(game, i) for i in range(2)]
    hull = feasible_set(game, "union-hull")
    assert is_subset(inter, per_player[0])
    assert is_subset(inter, per_player[1])
    assert is_subset(per_player[0], hull)
    assert is_subset(per_player[1], hull)


def test_feasible_set_shared_selector_independent():
    game = load_fixture("linear_vector_shared")
    a = feasible_set(game, "intersection")
    b = feasible_set(game, "union-hull")
    c = feasible_set(game, 0)
    assert a == b == c


def test_feasible_set_bad_selector():
    game = load_fixture("linear_generalized")
    with pytest.raises(Exception):
        feasible_set(game, 5)


def test_empty_feasible_set_raises():
    region = HPolyhedron.from_rows([[1], [-1]], [0, -1])
    game = make_game([Player.make(1, [[1]])],
                     SharedConstraints(region), [(0, 1)])
    with pytest.raises(EmptySet):
        feasible_set(game, "intersection")


def test_constraint_system_includes_boxes():
    game = load_fixture("linear_generalized")
    for i in range(2):
        h = constraint_system(game, i)
        assert not h.contains((Q(99), Q(0), Q(0), Q(0)))
    inter = intersection_system(game)
    assert inter.contains((Q(1), Q(2), Q(1), Q(2)))


@settings(deadline=None, max_examples=25)
@given(seeds)
def test_intersection_inside_each_region_inside_hull(seed):
    rng = random.Random(seed)
    game = random_generalized_game(rng)
    try:
        inter = feasible_set(game, "intersection")
    except EmptySet:
        return
    hull = feasible_set(game, "union-hull")
    for i in range(len(game.players)):
        xi = feasible_set(game, i)
        assert is_subset(inter, xi)
        assert is_subset(xi, hull)


@settings(deadline=None, max_examples=25)
@given(seeds)
def test_random_shared_games_validate(seed):
    rng = random.Random(seed)
    game = random_shared_game(rng)
    assert validate(game) == []
