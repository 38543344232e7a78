import random

import pytest

from polycrystal.cartan import CartanType, index_domain
from polycrystal.diamond import configuration, diamond, diamond_sum, render
from polycrystal.lattice import highest
from polycrystal.tableaux import partial, partial_star
from polycrystal.verify import random_element


def test_configuration_points():
    a3 = configuration(CartanType.parse("A3"))
    assert a3.point(1, 1) == (0, 1)
    assert a3.point(2, 2) == (3, 2)
    assert a3.point(1, 3) == (2, 3)
    assert configuration(CartanType.parse("D4")).point(1, 4) == (2, 2)
    assert configuration(CartanType.parse("B2")).point(2, 1) == (2, 1)


def test_diamond_members():
    a3 = CartanType.parse("A3")
    assert diamond(a3, 1, 1).as_dict() == {(1, 1): 1, (1, 2): -1, (2, 1): 1}
    assert diamond(a3, 2, 2, True).as_dict() == {(1, 2): 1, (1, 3): -1, (2, 1): -1, (2, 2): 1}
    for n in (2, 3, 4):
        b = CartanType.parse(f"B{n}")
        assert diamond(b, 1, n).as_dict()[(2, n - 1)] == -2


def test_diamond_examples(b_a3, b_d4):
    assert diamond_sum(b_a3, 2, 1) == -2
    assert diamond_sum(b_d4, 3, 3, True) == 1
    top = highest("D4")
    assert all(diamond_sum(top, *st) == 0 for st in index_domain(top.cartan))


@pytest.mark.parametrize("name", ["A3", "B2", "B3", "D4", "D5"])
def test_diamond_agrees_with_linear_forms(name):
    c = CartanType.parse(name)
    rng = random.Random(7)
    for _ in range(40):
        b = random_element(c, rng, rng.randint(0, 12))
        for st in index_domain(c):
            assert diamond_sum(b, *st) == partial(b, *st)
            assert diamond_sum(b, *st, True) == partial_star(b, *st)


def test_render_marks_members(b_a3):
    text = render(b_a3, (1, 3), star=True)
    assert text.count("[") == len(diamond(b_a3.cartan, 1, 3, True).members)
