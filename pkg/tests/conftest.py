import pytest

from polycrystal.cartan import CartanType
from polycrystal.lattice import make_element


@pytest.fixture
def a3():
    return CartanType.parse("A3")


@pytest.fixture
def d4():
    return CartanType.parse("D4")


@pytest.fixture
def b_a3(a3):
    return make_element(a3, (2, 4, 0, 5, 1, 3))


@pytest.fixture
def b_d4(d4):
    return make_element(d4, (0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 0))


def pytest_terminal_summary(terminalreporter):
    import sys

    acc = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acc.RESULTS):
        ok, detail = acc.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
