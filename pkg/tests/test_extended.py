import json
import random

import pytest

from polycrystal.cartan import CartanType, WeightVector
from polycrystal.extended import (
    E_hat,
    ExtendedElement,
    ExtendedLabel,
    F_hat,
    apply_hat_word,
    eps_hat,
    extended_configuration,
    extended_family,
    label_leq,
    parse_hat_word,
    select_hat,
    sigma_hat,
    weight_hat,
)
from polycrystal.lattice import make_element
from polycrystal.verify import random_extended


def L(text):
    return ExtendedLabel.parse(text)


@pytest.fixture
def xa3(a3, b_a3):
    return ExtendedElement.of(a3, {0: b_a3, 1: make_element(a3, (0, 2, 1, 3, 1, 2))})


@pytest.fixture
def xd4(d4, b_d4):
    return ExtendedElement.of(d4, {0: b_d4, 1: make_element(d4, (0, 0, 0, 2, 0, 0, 2, 1, 2, 1, 1, 0))})


def test_a3_example(xa3):
    fam = extended_family(xa3.cartan, 1)
    assert [str(g) for g in fam] == ["(1)", "(2)", "(3)", "(1)*"]
    assert [sigma_hat(xa3, 1, 0, g) for g in fam] == [2, 0, 2, 2]
    assert eps_hat(xa3, 1, 0) == 0
    sel = select_hat(xa3, 1, 0)
    assert (sel.value, sel.least, sel.greatest) == (2, L("(1)"), L("(1)*"))
    assert E_hat(xa3, 1, 0).component(1).values == (0, 2, 1, 3, 1, 3)
    assert E_hat(xa3, 1, 0).component(0) == xa3.component(0)
    assert F_hat(xa3, 1, 0).component(0).values == (2, 4, 0, 5, 1, 4)
    assert F_hat(xa3, 1, 0).component(1) == xa3.component(1)


def test_d4_example(xd4):
    fam = extended_family(xd4.cartan, 1)
    assert [sigma_hat(xd4, 1, 0, g) for g in fam] == [1, 1, 2, 0]
    assert eps_hat(xd4, 1, 0) == 2
    sel = select_hat(xd4, 1, 0)
    assert (sel.least, sel.greatest) == (L("(3)"), L("(3)"))
    assert E_hat(xd4, 1, 0).component(0).values == (0, 0, 0, 1, 0, 1, 3, 0, 2, 1, 0, 0)
    assert F_hat(xd4, 1, 0).component(0).values == (0, 0, 0, 3, 0, 1, 3, 0, 2, 1, 0, 0)


def test_all_highest(a3):
    x = ExtendedElement.of(a3, {})
    assert eps_hat(x, 2, 5) == 0
    sel = select_hat(x, 1, 0)
    assert (sel.value, sel.least, sel.greatest) == (0, L("(1)"), L("(1)*"))
    assert weight_hat(x) == WeightVector.zero(3)


def test_weight_hat(xa3, a3, b_a3):
    # b^(0) has column sums (5,5,5) and b^(1) has (3,3,3)
    assert weight_hat(xa3) == WeightVector((-2, -2, -2))
    assert weight_hat(ExtendedElement.of(a3, {1: b_a3})) == WeightVector((5, 5, 5))


def test_label_order():
    assert label_leq(L("(3)"), L("(1)*"))
    assert label_leq(L("(1)"), L("(3)"))
    assert label_leq(L("(3)*"), L("(1)*"))
    assert not label_leq(L("(1)*"), L("(3)"))


def test_json_and_display(xa3):
    data = json.loads(json.dumps(xa3.to_json()))
    assert ExtendedElement.from_json(data) == xa3
    shown = xa3.display(underline=False)
    assert shown == "(…, (0,2,1,3,1,2), (2,4,0,5,1,3), …)"
    assert "̲" in xa3.display()


def test_words(xa3):
    assert parse_hat_word("F(1,0)E(2,-1)") == [("F", 1, 0), ("E", 2, -1)]
    with pytest.raises(ValueError):
        parse_hat_word("G(1,0)")
    steps = apply_hat_word(xa3, parse_hat_word("F(1,0)E(1,0)"))
    assert steps[-1] == xa3


def test_layout_points(a3):
    layout = extended_configuration(a3, range(-1, 2))
    assert layout[(0, 1, 1)] == (0, 1)
    assert layout[(1, 1, 1)] == (-3, 4)
    assert layout[(0, 1, 3)] == (-4, 1)
    with pytest.raises(ValueError):
        extended_configuration(CartanType.parse("B3"), range(2))


@pytest.mark.parametrize("name", ["A2", "B2", "D4"])
def test_inversion_on_random_points(name):
    c = CartanType.parse(name)
    rng = random.Random(3)
    for _ in range(30):
        x = random_extended(c, rng)
        i, k = rng.randint(1, c.rank), rng.randint(-1, 1)
        assert E_hat(F_hat(x, i, k), i, k) == x
        assert F_hat(E_hat(x, i, k), i, k) == x
        assert eps_hat(F_hat(x, i, k), i, k) == eps_hat(x, i, k) + 1
