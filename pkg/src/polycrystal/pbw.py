"""Type-A bijection between PBW data and polyhedral coordinates."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .cartan import CartanType, Family, PositiveRoot, as_cartan, convex_order, index_domain
from .extended import ExtendedElement
from .lattice import CrystalElement, is_member_chains, make_element


@dataclass(frozen=True)
class PbwDatum:
    """Exponents c_[i,j], stored in convex order."""

    cartan: CartanType
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.cartan.family is not Family.A:
            raise ValueError(f"PBW data are only supported for type A, not {self.cartan}")
        if len(self.exponents) != len(convex_order(self.cartan)):
            raise ValueError("wrong number of exponents")
        if any(c < 0 for c in self.exponents):
            raise ValueError("PBW exponents must be nonnegative")

    def c(self, i: int, j: int) -> int:
        for root, v in zip(convex_order(self.cartan), self.exponents):
            if (root.i, root.j) == (i, j):
                return v
        return 0

    def as_dict(self) -> dict[PositiveRoot, int]:
        return dict(zip(convex_order(self.cartan), self.exponents))

    def printed(self) -> tuple[int, ...]:
        """Print order is reverse convex order (c_l, ..., c_1)."""
        return tuple(reversed(self.exponents))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.printed())) + ")"


def parse_pbw(cartan: CartanType | str, printed: Sequence[int]) -> PbwDatum:
    cartan = as_cartan(cartan)
    return PbwDatum(cartan, tuple(int(v) for v in reversed(list(printed))))


def pbw_from_intervals(cartan: CartanType | str, data: Mapping[tuple[int, int], int]) -> PbwDatum:
    cartan = as_cartan(cartan)
    return PbwDatum(cartan, tuple(int(data.get((r.i, r.j), 0)) for r in convex_order(cartan)))


def pbw_to_polyhedral(c: PbwDatum) -> CrystalElement:
    coords = {}
    for i, j in index_domain(c.cartan):
        coords[(i, j)] = sum(c.c(t, i + j - 1) for t in range(1, j + 1))
    b = make_element(c.cartan, coords)
    assert is_member_chains(b), f"image {b} of {c} is not a member"
    return b


def polyhedral_to_pbw(b: CrystalElement) -> PbwDatum:
    if b.cartan.family is not Family.A:
        raise ValueError(f"PBW data are only supported for type A, not {b.cartan}")
    if not is_member_chains(b):
        raise ValueError(f"{b} is not an element of B(infinity)")
    data = {}
    for root in convex_order(b.cartan):
        i, j = root.i, root.j
        data[(i, j)] = b.get(j - i + 1, i) - b.get(j - i + 2, i - 1)
    return pbw_from_intervals(b.cartan, data)


def extended_pbw_to_polyhedral(cartan: CartanType | str, slots: Mapping[int, PbwDatum]) -> ExtendedElement:
    cartan = as_cartan(cartan)
    return ExtendedElement.of(cartan, {k: pbw_to_polyhedral(c) for k, c in slots.items()})


def extended_polyhedral_to_pbw(x: ExtendedElement) -> dict[int, PbwDatum]:
    return {k: polyhedral_to_pbw(b) for k, b in x.slots}
