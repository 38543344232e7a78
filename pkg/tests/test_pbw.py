import random

import pytest

from polycrystal.cartan import CartanType
from polycrystal.extended import ExtendedElement, F_hat
from polycrystal.lattice import highest, make_element
from polycrystal.pbw import (
    PbwDatum,
    extended_pbw_to_polyhedral,
    extended_polyhedral_to_pbw,
    parse_pbw,
    pbw_to_polyhedral,
    polyhedral_to_pbw,
)
from polycrystal.verify import random_element


def test_zero():
    a3 = CartanType.parse("A3")
    assert pbw_to_polyhedral(PbwDatum(a3, (0,) * 6)) == highest(a3)
    assert polyhedral_to_pbw(highest(a3)).exponents == (0,) * 6


@pytest.mark.parametrize(
    "pbw,poly",
    [((1, 2, 2, 1, 0, 3), (2, 4, 0, 5, 1, 3)), ((1, 2, 0, 0, 1, 2), (0, 2, 1, 3, 1, 2))],
)
def test_worked_pairs(a3, pbw, poly):
    assert pbw_to_polyhedral(parse_pbw(a3, pbw)).values == poly
    assert polyhedral_to_pbw(make_element(a3, poly)).printed() == pbw


def test_extended_commutes(a3):
    data = {0: parse_pbw(a3, (1, 2, 2, 1, 0, 3)), 1: parse_pbw(a3, (1, 2, 0, 0, 1, 2))}
    x = extended_pbw_to_polyhedral(a3, data)
    assert x.component(1).values == (0, 2, 1, 3, 1, 2)
    assert x.component(0).values == (2, 4, 0, 5, 1, 3)
    moved = {0: parse_pbw(a3, (1, 2, 2, 1, 0, 4)), 1: data[1]}
    assert F_hat(x, 1, 0) == extended_pbw_to_polyhedral(a3, moved)
    assert extended_polyhedral_to_pbw(x) == data
    assert extended_pbw_to_polyhedral(a3, {}) == ExtendedElement.of(a3, {})


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4"])
def test_roundtrip(name):
    c = CartanType.parse(name)
    rng = random.Random(11)
    for _ in range(50):
        b = random_element(c, rng, rng.randint(0, 15))
        assert pbw_to_polyhedral(polyhedral_to_pbw(b)) == b


def test_rejects_other_types():
    with pytest.raises(ValueError):
        polyhedral_to_pbw(highest("B2"))
    with pytest.raises(ValueError):
        PbwDatum(CartanType.parse("A2"), (1, -1, 0))
