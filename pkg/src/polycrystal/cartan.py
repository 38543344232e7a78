"""Root-system data for the finite types A_n, B_n and D_n."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache


class Family(str, Enum):
    A = "A"
    B = "B"
    D = "D"


_MIN_RANK = {Family.A: 1, Family.B: 2, Family.D: 4}


@dataclass(frozen=True, order=True)
class CartanType:
    family: Family
    rank: int

    def __post_init__(self) -> None:
        try:
            fam = Family(self.family)
        except ValueError:
            raise ValueError(f"unsupported family {self.family!r}") from None
        object.__setattr__(self, "family", fam)
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[fam]:
            raise ValueError(f"{fam.value}{self.rank}: rank must be >= {_MIN_RANK[fam]}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([ABDabd])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(Family(m.group(1).upper()), int(m.group(2)))

    @property
    def n(self) -> int:
        return self.rank

    @property
    def indices(self) -> range:
        return range(1, self.rank + 1)

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


def as_cartan(value: "CartanType | str") -> CartanType:
    return value if isinstance(value, CartanType) else CartanType.parse(value)


def _check_index(cartan: CartanType, i: int) -> None:
    if not 1 <= i <= cartan.rank:
        raise ValueError(f"index {i} out of range for {cartan}")


@lru_cache(maxsize=None)
def cartan_matrix(cartan: CartanType) -> tuple[tuple[int, ...], ...]:
    """Rows indexed by h_i, columns by alpha_j (1-based labels, 0-based storage)."""
    n = cartan.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    if cartan.family is Family.D:
        edges = [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    else:
        edges = [(k, k + 1) for k in range(1, n)]
    for p, q in edges:
        a[p - 1][q - 1] = a[q - 1][p - 1] = -1
    if cartan.family is Family.B:
        # alpha_n is the short root
        a[n - 1][n - 2] = -2
    return tuple(tuple(row) for row in a)


def cartan_pairing(cartan: CartanType, i: int, j: int) -> int:
    """Return <h_i, alpha_j>."""
    _check_index(cartan, i)
    _check_index(cartan, j)
    return cartan_matrix(cartan)[i - 1][j - 1]


@dataclass(frozen=True)
class IndexDomain:
    """Coordinate positions (s, t) that may carry a nonzero value.

    ``pairs`` is stored in the canonical I/O order: s descending, then t
    descending, so the first entry is the bottom-right coordinate.
    """

    cartan: CartanType
    pairs: tuple[tuple[int, int], ...]
    position: dict[tuple[int, int], int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "position", {st: k for k, st in enumerate(self.pairs)})

    def __contains__(self, st: object) -> bool:
        return st in self.position

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @property
    def rows(self) -> int:
        return max(s for s, _ in self.pairs)


def _in_domain(cartan: CartanType, s: int, t: int) -> bool:
    n = cartan.rank
    if s < 1 or not 1 <= t <= n:
        return False
    if cartan.family is Family.A:
        return s + t <= n + 1
    if cartan.family is Family.B:
        return s <= n
    return s <= n - 1


@lru_cache(maxsize=None)
def index_domain(cartan: CartanType) -> IndexDomain:
    n = cartan.rank
    pairs = [
        (s, t)
        for s in range(n, 0, -1)
        for t in range(n, 0, -1)
        if _in_domain(cartan, s, t)
    ]
    return IndexDomain(cartan, tuple(pairs))


@dataclass(frozen=True)
class WeightVector:
    """Integer combination sum(coeffs[t-1] * alpha_t)."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.coeffs))

    def scaled(self, c: int) -> "WeightVector":
        return WeightVector(tuple(c * a for a in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @classmethod
    def zero(cls, n: int) -> "WeightVector":
        return cls((0,) * n)

    @classmethod
    def simple(cls, n: int, i: int) -> "WeightVector":
        return cls(tuple(1 if t == i else 0 for t in range(1, n + 1)))


def pair_with_weight(cartan: CartanType, i: int, wt: WeightVector) -> int:
    """<h_i, wt> for a weight written in simple roots."""
    row = cartan_matrix(cartan)[i - 1]
    return sum(a * c for a, c in zip(row, wt.coeffs))


@lru_cache(maxsize=None)
def positive_roots(cartan: CartanType) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, generated by root strings.

    Sorted by height, then lexicographically.
    """
    n = cartan.rank
    a = cartan_matrix(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p: how far down the i-string from beta goes
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(a[i][j] * beta[j] for j in range(n))
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r))))


@dataclass(frozen=True, order=True)
class PositiveRoot:
    """Type-A positive root alpha_i + ... + alpha_j, written [i, j]."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.i <= self.j:
            raise ValueError(f"bad interval [{self.i},{self.j}]")

    def coeffs(self, n: int) -> tuple[int, ...]:
        return tuple(1 if self.i <= t <= self.j else 0 for t in range(1, n + 1))

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


@lru_cache(maxsize=None)
def convex_order(cartan: CartanType) -> tuple[PositiveRoot, ...]:
    """Convex order for type A: grouped by right endpoint, then left endpoint."""
    if cartan.family is not Family.A:
        raise ValueError(f"convex order is only provided for type A, not {cartan}")
    n = cartan.rank
    return tuple(PositiveRoot(i, j) for j in range(1, n + 1) for i in range(1, j + 1))
