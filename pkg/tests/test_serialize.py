import json

import pytest

from helpers import bir_array, grid22, pl_array
from togglekit import BIRATIONAL, PL
from togglekit.posets import OrderIdeal, Poset, rectangle_poset, triangle_poset
from togglekit.rational import Rat
from togglekit.serialize import (
    array_from_json,
    array_to_json,
    dumps_canonical,
    ideal_from_json,
    ideal_to_json,
    pattern_from_json,
    pattern_to_json,
    poset_from_json,
    poset_to_json,
    tableau_from_json,
    tableau_to_json,
)
from togglekit.tableaux import Tableau, tableau_to_pattern

POSETS = [
    rectangle_poset(2, 2),
    rectangle_poset(3, 4),
    triangle_poset(3),
    Poset(3, [(0, 2), (1, 2)]),
]


@pytest.mark.parametrize("poset", POSETS)
def test_poset_round_trip(poset):
    again = poset_from_json(json.loads(json.dumps(poset_to_json(poset))))
    assert again == poset
    assert again.labels == poset.labels
    assert again.rc == poset.rc
    assert again.rectangle_shape == poset.rectangle_shape


def test_ideal_round_trip():
    poset = grid22()
    ideal = OrderIdeal(poset, [0, 1])
    assert ideal_to_json(ideal) == [0, 1]
    assert ideal_from_json(poset, [1, 0]) == ideal


def test_array_round_trip():
    poset = grid22()
    f = bir_array(poset, 1, 2, "5/12", "5/4")
    obj = array_to_json(f)
    assert obj["values"] == ["1", "2", "5/12", "5/4"]
    assert array_from_json(BIRATIONAL, poset, json.loads(json.dumps(obj))) == f
    g = pl_array(poset, "1/10", "1/5", "3/10", "2/5")
    assert array_from_json(PL, poset, array_to_json(g)) == g


def test_array_json_keeps_the_boundary():
    poset = grid22()
    f = PL.array(poset, [0, 0, 0, 0], boundary=(Rat(0), Rat(2)))
    obj = array_to_json(f)
    assert obj["boundary"] == ["0", "2"]
    assert array_from_json(PL, poset, obj) == f


def test_tableau_round_trip():
    t = Tableau([[1, 2, 2], [3, 5, 5]], 5)
    obj = tableau_to_json(t)
    assert tableau_from_json(json.loads(json.dumps(obj))) == t


def test_pattern_round_trip():
    p = tableau_to_pattern(Tableau([[1, 2, 2], [3, 5, 5]], 5))
    assert pattern_from_json(json.loads(json.dumps(pattern_to_json(p)))) == p


def test_dumps_canonical_is_deterministic():
    a = dumps_canonical({"b": 1, "a": [2, 3]})
    b = dumps_canonical({"a": [2, 3], "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a) == {"a": [2, 3], "b": 1}


def test_bad_payloads_raise():
    poset = grid22()
    with pytest.raises((ValueError, KeyError, TypeError)):
        array_from_json(PL, poset, {"values": ["1", "2"]})
    with pytest.raises(Exception):
        tableau_from_json({"rows": [[2, 1]], "max_entry": 3})
