import itertools

import pytest

import oracles
from satcomb import build
from satcomb.errors import NotDominant
from satcomb.weights import (
    decompose_character,
    dominance_leq,
    dominant_below_labels,
    omega_labels,
    omega_set,
    weight_diagram,
    weight_multiplicity,
    weyl_dimension,
)


def test_dominance_examples():
    assert dominance_leq(build("A2"), (1, 2), (1, 2))
    assert dominance_leq(build("A1"), (1,), (2,))
    assert not dominance_leq(build("A2", "adj"), (1, 0), (0, 1))


def test_omega_examples():
    assert omega_set(build("A1"), (1,)) == [(1,), (0,), (-1,)]
    assert omega_set(build("A1", "adj"), (1,)) == [(1,), (-1,)]
    assert omega_set(build("A1"), (2,)) == [(2,), (1,), (0,), (-1,), (-2,)]
    with pytest.raises(NotDominant):
        omega_set(build("A1"), (-1,))


def test_multiplicity_examples():
    assert weight_multiplicity(build("B2"), (1, 1), (1, 1)) == 1
    assert weight_multiplicity(build("A1"), (1,), (0,)) == 1
    assert weight_multiplicity(build("A2"), (1, 1), (0, 0)) == 2
    with pytest.raises(NotDominant):
        weight_multiplicity(build("A1"), (-1,), (0,))


def test_dimension_examples():
    assert weyl_dimension(build("G2"), (0, 0)) == 1
    assert weyl_dimension(build("A1"), (1,)) == 3
    assert weyl_dimension(build("A1"), (2,)) == 5
    assert weyl_dimension(build("E8", "adj"), (0, 0, 0, 0, 0, 0, 0, 1)) == 248


SHELL_TYPES = [("A1", "sc"), ("A1", "adj"), ("A2", "sc"), ("A2", "adj"), ("B2", "sc"), ("B2", "adj"), ("G2", "sc"),
               ("A1xA1", "adj"), ("A3", "sc")]


@pytest.mark.parametrize("name,iso", SHELL_TYPES)
def test_dominant_below_matches_box_scan(name, iso):
    d = build(name, iso)
    for lam in oracles.norm_shell(d, 12):
        assert set(dominant_below_labels(d, lam)) == oracles.dominant_below(d, lam)


@pytest.mark.parametrize("name,iso", [("A1", "adj"), ("A2", "adj"), ("B2", "sc"), ("G2", "sc"), ("A1xA1", "adj")])
def test_omega_matches_definition(name, iso):
    d = build(name, iso)
    for lam in oracles.norm_shell(d, 8):
        assert set(omega_labels(d, lam)) == oracles.omega(d, lam)


@pytest.mark.parametrize("name,iso", [("A2", "adj"), ("A3", "adj")])
def test_type_a_multiplicities_match_tableaux(name, iso):
    d = build(name, iso)
    for lam in oracles.norm_shell(d, 10):
        for nu in dominant_below_labels(d, lam):
            assert weight_multiplicity(d, d.from_labels(lam), d.from_labels(nu)) == oracles.type_a_multiplicity(lam, nu)


@pytest.mark.parametrize("name,iso", SHELL_TYPES + [("C3", "adj"), ("B3", "adj")])
def test_diagram_dimension_matches_weyl(name, iso):
    d = build(name, iso)
    for lam in oracles.norm_shell(d, 10):
        coords = d.from_labels(lam)
        assert weight_diagram(d, coords).dimension == weyl_dimension(d, coords)


def test_decompose_character_round_trip():
    d = build("A2", "adj")
    char = oracles.character_product(d, [(1, 0), (0, 1)])
    assert decompose_character(d, char) == {(1, 1): 1, (0, 0): 1}
    for a, b in itertools.product([(1, 0), (1, 1)], repeat=2):
        char = oracles.character_product(d, [a, b])
        dec = decompose_character(d, char)
        assert sum(m * weyl_dimension(d, d.from_labels(k)) for k, m in dec.items()) == sum(char.values())
