"""Linear forms d_{s,t}, d*_{s,t}, the tableaux T_i, T_i* and the sums over them."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cartan import CartanType, Family, cartan_matrix, index_domain
from .lattice import CrystalElement, LinearForm

Cell = tuple[int, int]


class Partition(tuple):
    """Weakly decreasing positive parts; trailing zeros are trimmed."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, r: int) -> int:
        return self[r - 1] if 1 <= r <= len(self) else 0

    def has_cell(self, r: int, c: int) -> bool:
        return c >= 1 and c <= self.part(r)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return tuple((r, c) for r, p in enumerate(self, 1) for c in range(1, p + 1))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(r) >= p for r, p in enumerate(other, 1))

    def union(self, other: "Partition") -> "Partition":
        k = max(len(self), len(other))
        return Partition(max(self.part(r), other.part(r)) for r in range(1, k + 1))

    def intersection(self, other: "Partition") -> "Partition":
        k = min(len(self), len(other))
        return Partition(min(self.part(r), other.part(r)) for r in range(1, k + 1))

    @property
    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("()*")
        return cls(int(p) for p in body.split(",") if p.strip())


def eta(k: int) -> Partition:
    return Partition([k])


def staircase(k: int) -> Partition:
    return Partition(range(k, 0, -1))


# ---------------------------------------------------------------- linear forms


def partial_form(cartan: CartanType, s: int, t: int) -> LinearForm:
    """d_{s,t} as an unrestricted form (valid for any row s)."""
    n = cartan.rank
    a = cartan_matrix(cartan)[t - 1]
    d: dict = {(s, t): 1, (s + 1, t): 1}
    for k in range(t + 1, n + 1):
        d[(s, k)] = d.get((s, k), 0) + a[k - 1]
    for k in range(1, t):
        d[(s + 1, k)] = d.get((s + 1, k), 0) + a[k - 1]
    return LinearForm.of(d)


def partial_star_form(cartan: CartanType, s: int, t: int) -> LinearForm:
    """d*_{s,t}: the same pattern shifted one row up."""
    return partial_form(cartan, s - 1, t)


def _require_domain(cartan: CartanType, s: int, t: int) -> None:
    if (s, t) not in index_domain(cartan):
        raise ValueError(f"({s},{t}) is outside the index domain of {cartan}")


@lru_cache(maxsize=None)
def _partial_cached(cartan: CartanType, s: int, t: int, star: bool) -> LinearForm:
    f = partial_star_form if star else partial_form
    return f(cartan, s, t).restricted(cartan)


def partial(b: CrystalElement, s: int, t: int) -> int:
    _require_domain(b.cartan, s, t)
    return _partial_cached(b.cartan, s, t, False).evaluate(b)


def partial_star(b: CrystalElement, s: int, t: int) -> int:
    _require_domain(b.cartan, s, t)
    return _partial_cached(b.cartan, s, t, True).evaluate(b)


# ---------------------------------------------------------------- tableaux


@dataclass(frozen=True)
class TableauEntry:
    index: tuple[int, int]
    star: bool
    coeff: int = 1

    def form(self, cartan: CartanType) -> LinearForm:
        f = partial_star_form if self.star else partial_form
        return self.coeff * f(cartan, *self.index)

    def token(self) -> str:
        c = "" if self.coeff == 1 else str(self.coeff)
        st = "*" if self.star else ""
        return f"{c}∂{st}[{self.index[0]},{self.index[1]}]"


@dataclass(frozen=True)
class Tableau:
    cartan: CartanType
    i: int
    star: bool
    shape: Partition
    cells: tuple[tuple[Cell, TableauEntry], ...]

    def __getitem__(self, cell: Cell) -> TableauEntry:
        return dict(self.cells)[cell]

    def index_of(self, cell: Cell) -> tuple[int, int]:
        return self[cell].index

    @property
    def width(self) -> int:
        return self.shape.part(1)

    def render(self) -> str:
        entries = dict(self.cells)
        rows = []
        for r, p in enumerate(self.shape, 1):
            rows.append(" ".join(entries[(r, c)].token() for c in range(1, p + 1)))
        return "\n".join(rows)


@lru_cache(maxsize=None)
def tableau(cartan: CartanType, i: int, star: bool) -> Tableau:
    n = cartan.rank
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for {cartan}")
    fam = cartan.family
    cells: dict[Cell, TableauEntry] = {}
    if not star:
        width = {Family.A: n + 1 - i, Family.B: n, Family.D: n - 1}[fam]
        shape = eta(width)
        for t in range(1, width + 1):
            cells[(1, t)] = TableauEntry((t, i), False)
    elif (fam is Family.A) or (fam is Family.B and i <= n - 1) or (fam is Family.D and i <= n - 2):
        shape = eta(i)
        for t in range(1, i + 1):
            cells[(1, t)] = TableauEntry((t, i + 1 - t), True)
    elif fam is Family.B:
        shape = staircase(n)
        for s, t in shape.cells:
            if t >= 2:
                # column n+1-t: the only reading matching the worked B_3 tableau
                cells[(s, t)] = TableauEntry((s + t - 1, n + 1 - t), True, 2)
            else:
                cells[(s, t)] = TableauEntry((s, n), True)
    else:
        shape = staircase(n - 1)
        odd_col, even_col = (n - 1, n) if i == n - 1 else (n, n - 1)
        for s, t in shape.cells:
            if t >= 2:
                cells[(s, t)] = TableauEntry((s + t - 1, n - t), True)
            else:
                cells[(s, t)] = TableauEntry((s, odd_col if s % 2 else even_col), True)
    return Tableau(cartan, i, star, shape, tuple(sorted(cells.items())))


# ---------------------------------------------------------------- families


@dataclass(frozen=True)
class PartitionFamily:
    cartan: CartanType
    i: int
    star: bool
    shape: Partition
    members: tuple[Partition, ...]

    def __contains__(self, lam: object) -> bool:
        return lam in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _sub_partitions(shape: Partition) -> list[Partition]:
    out = []
    ranges = [range(p + 1) for p in shape]
    for parts in product(*ranges):
        if all(a >= b for a, b in zip(parts, parts[1:])) and any(parts):
            out.append(Partition(parts))
    return out


@lru_cache(maxsize=None)
def partition_family(cartan: CartanType, i: int, star: bool) -> PartitionFamily:
    shape = tableau(cartan, i, star).shape
    members = [p for p in _sub_partitions(shape) if not star or p.is_strict]
    members.sort(key=lambda p: (p.size, tuple(p)))
    return PartitionFamily(cartan, i, star, shape, tuple(members))


# ---------------------------------------------------------------- sums


def _check_member(cartan: CartanType, i: int, star: bool, lam: Partition) -> Partition:
    lam = Partition(lam)
    if lam not in partition_family(cartan, i, star):
        fam = "star family" if star else "family"
        raise ValueError(f"{lam} is not in the {fam} for i={i} of {cartan}")
    return lam


@lru_cache(maxsize=None)
def gamma_form(cartan: CartanType, i: int, lam: Partition) -> LinearForm:
    """Tail sum of T_i from column |lam| to the end, as a linear form."""
    lam = _check_member(cartan, i, False, lam)
    tab = tableau(cartan, i, False)
    total = LinearForm()
    for t in range(lam.size, tab.width + 1):
        total = total + tab[(1, t)].form(cartan)
    return total.restricted(cartan)


@lru_cache(maxsize=None)
def gamma_star_form(cartan: CartanType, i: int, lam: Partition) -> LinearForm:
    """Sum of the cells of T_i* inside lam (coefficients included)."""
    lam = _check_member(cartan, i, True, lam)
    tab = tableau(cartan, i, True)
    total = LinearForm()
    for cell in lam.cells:
        total = total + tab[cell].form(cartan)
    return total.restricted(cartan)


def gamma(b: CrystalElement, i: int, lam: Partition) -> int:
    return gamma_form(b.cartan, i, Partition(lam)).evaluate(b)


def gamma_star(b: CrystalElement, i: int, lam: Partition) -> int:
    return gamma_star_form(b.cartan, i, Partition(lam)).evaluate(b)


def gamma_any(b: CrystalElement, i: int, lam: Partition, star: bool) -> int:
    return gamma_star(b, i, lam) if star else gamma(b, i, lam)
