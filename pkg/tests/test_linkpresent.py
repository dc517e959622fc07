import json

import pytest
from hypothesis import given, settings

from conftest import braid_words
from swtori.braid import BraidWord, parse_braid
from swtori.errors import MalformedInput
from swtori.linkpresent import (
    FreeGroupEndomorphism,
    FreeWord,
    GroupPresentation,
    artin_action,
    braid_axis_presentation,
    closed_braid_presentation,
    cyclic_reduce,
)


def w(*ids):
    """FreeWord from 1-based signed ids."""
    return FreeWord((abs(i) - 1, 1 if i > 0 else -1) for i in ids)


def test_reduce_is_idempotent():
    word = w(1, 2, -2, -1, 3, 1, -1)
    assert word.reduce() == w(3)
    assert word.reduce().reduce() == word.reduce()
    assert len(word) == 7  # stored form untouched


def test_freeword_rejects_bad_exponent():
    with pytest.raises(MalformedInput):
        FreeWord([(0, 2)])


def test_artin_examples():
    assert artin_action(BraidWord(3)) == FreeGroupEndomorphism.identity(3)
    beta = artin_action(parse_braid("2: 1"))
    assert beta.images == (w(1, 2, -1), w(1))
    assert artin_action(parse_braid("2: 1 -1")) == FreeGroupEndomorphism.identity(2)
    assert artin_action(parse_braid("2: -1")).images == (w(2), w(-2, 1, 2))


def test_braid_relation():
    a = artin_action(parse_braid("3: 1 2 1"))
    b = artin_action(parse_braid("3: 2 1 2"))
    assert a == b
    far = artin_action(parse_braid("4: 1 3"))
    assert far == artin_action(parse_braid("4: 3 1"))


@settings(max_examples=100)
@given(braid_words(max_length=10))
def test_artin_action_is_invertible(b):
    composite = artin_action(b).compose(artin_action(b.inverse()))
    assert composite == FreeGroupEndomorphism.identity(b.strands)


@settings(max_examples=100)
@given(braid_words(max_length=10))
def test_artin_action_preserves_boundary_word(b):
    beta = artin_action(b)
    product = FreeWord((i, 1) for i in range(b.strands))
    assert cyclic_reduce(beta(product)) == cyclic_reduce(product)


def test_unknot_presentation():
    p = closed_braid_presentation(BraidWord(1))
    assert p.generators == ("x1",)
    assert p.relators == ()
    assert p.variables == ("t",)
    assert p.deficiency == 1


def test_trefoil_presentation():
    b = parse_braid("2: 1 1 1")
    p = closed_braid_presentation(b)
    beta = artin_action(b)
    assert p.relators == (beta.images[0] * w(-1),)
    assert p.abelianization == ("t", "t")


def test_single_component_abelianization():
    p = closed_braid_presentation(parse_braid("3: 1 2"))
    assert set(p.abelianization) == {"t"}
    q = closed_braid_presentation(parse_braid("3: 1"))
    assert q.abelianization == ("t1", "t1", "t2")


def test_hopf_axis_presentation():
    p = braid_axis_presentation(BraidWord(1))
    assert p.generators == ("x1", "a")
    assert p.relators == (w(2, 1, -2, -1),)
    assert p.variables == ("t", "tau")


def test_trefoil_axis_presentation():
    p = braid_axis_presentation(parse_braid("2: 1 1 1"))
    assert len(p.generators) == 3
    assert len(p.relators) == 2
    assert p.variables == ("t", "tau")


@settings(max_examples=100)
@given(braid_words())
def test_builders_emit_valid_presentations(b):
    for p in (closed_braid_presentation(b), braid_axis_presentation(b)):
        p.check()
        assert p.deficiency == 1
        for r in p.relators:
            assert p.abelianize(r) == {}


def test_check_rejects_inconsistent_relator():
    p = GroupPresentation(("x1", "x2"), (0, 1), (w(1, 2, -1),), ("t1", "t2"))
    with pytest.raises(MalformedInput):
        p.check()


def test_json_round_trip():
    p = braid_axis_presentation(parse_braid("3: 1 -2 1"))
    data = json.loads(p.to_json())
    assert data["abelianization"]["a"] == "tau"
    assert GroupPresentation.from_dict(data) == p
