"""Sliding diamond rule: planar configuration and diamond-weighted sums.

Diamonds are built from Cartan adjacency alone; they never call the
tableaux linear forms, so comparing the two is a real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanType, Family, cartan_pairing, index_domain
from .lattice import CrystalElement

Pair = tuple[int, int]


@dataclass(frozen=True)
class Configuration:
    cartan: CartanType
    placement: tuple[tuple[Pair, Pair], ...]

    def point(self, s: int, t: int) -> Pair:
        return dict(self.placement)[(s, t)]

    def as_dict(self) -> dict[Pair, Pair]:
        return dict(self.placement)


@lru_cache(maxsize=None)
def configuration(cartan: CartanType) -> Configuration:
    n = cartan.rank
    place = {}
    for s, t in index_domain(cartan):
        if cartan.family is Family.D and t == n:
            place[(s, t)] = (2 * s + n - 4, n - 2)
        else:
            place[(s, t)] = (2 * s + t - 3, t)
    return Configuration(cartan, tuple(sorted(place.items())))


@dataclass(frozen=True)
class Diamond:
    center: Pair
    star: bool
    members: tuple[tuple[Pair, int], ...]

    def as_dict(self) -> dict[Pair, int]:
        return dict(self.members)


@lru_cache(maxsize=None)
def diamond(cartan: CartanType, s: int, t: int, star: bool = False) -> Diamond:
    if (s, t) not in index_domain(cartan):
        raise ValueError(f"({s},{t}) is outside the index domain of {cartan}")
    n = cartan.rank
    top, low = (s - 1, s) if star else (s, s + 1)
    members: dict[Pair, int] = {}

    def put(u: int, v: int, coeff: int) -> None:
        if (u, v) in index_domain(cartan):
            members[(u, v)] = members.get((u, v), 0) + coeff

    put(top, t, 1)
    put(low, t, 1)
    for k in range(1, n + 1):
        if k == t or cartan_pairing(cartan, k, t) == 0:
            continue
        coeff = cartan_pairing(cartan, t, k)
        put(top if k > t else low, k, coeff)
    return Diamond((s, t), star, tuple(sorted(members.items())))


def diamond_sum(b: CrystalElement, s: int, t: int, star: bool = False) -> int:
    d = diamond(b.cartan, s, t, star)
    return sum(c * b.get(u, v) for (u, v), c in d.members)


def render(b: CrystalElement, at: Pair | None = None, star: bool = False) -> str:
    """Values on the configuration grid; members of the chosen diamond are bracketed."""
    conf = configuration(b.cartan).as_dict()
    chosen = diamond(b.cartan, *at, star).as_dict() if at else {}
    # several D-type coordinates share a level, so group by point
    grid: dict[Pair, list[str]] = {}
    for st, (x, y) in conf.items():
        v = str(b.get(*st))
        grid.setdefault((x, y), []).append(f"[{v}]" if st in chosen else v)
    xs = [x for x, _ in grid]
    ys = [y for _, y in grid]
    width = max(len("/".join(v)) for v in grid.values()) + 1
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = ""
        for x in range(min(xs), max(xs) + 1):
            cell = "/".join(grid.get((x, y), []))
            row += cell.center(width) if cell else " " * width
        lines.append(row.rstrip())
    return "\n".join(lines)
