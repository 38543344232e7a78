"""Lattice points of the polyhedral realization: elements, membership, weight."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    CartanType,
    Family,
    WeightVector,
    as_cartan,
    index_domain,
)

Pair = tuple[int, int]


@dataclass(frozen=True)
class LinearForm:
    """Integer linear form in the variables x_{s,t}.

    Terms are kept sorted with zero coefficients dropped, so structural
    equality is equality of forms. Rows are unrestricted (possibly <= 0);
    reads outside an index domain evaluate to 0.
    """

    terms: tuple[tuple[Pair, int], ...] = ()

    @classmethod
    def of(cls, coeffs: Mapping[Pair, int]) -> "LinearForm":
        return cls(tuple(sorted((k, c) for k, c in coeffs.items() if c)))

    @classmethod
    def var(cls, s: int, t: int, n: int | None = None, coeff: int = 1) -> "LinearForm":
        # columns 0 and n+1 are identically zero by convention
        if t < 1 or (n is not None and t > n):
            return cls()
        return cls((((s, t), coeff),)) if coeff else cls()

    def as_dict(self) -> dict[Pair, int]:
        return dict(self.terms)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, 0) + c
        return LinearForm.of(d)

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def __rmul__(self, c: int) -> "LinearForm":
        return LinearForm.of({k: c * v for k, v in self.terms})

    def restricted(self, cartan: CartanType) -> "LinearForm":
        dom = index_domain(cartan)
        return LinearForm(tuple((k, c) for k, c in self.terms if k in dom))

    def evaluate(self, b: "CrystalElement") -> int:
        return sum(c * b.get(s, t) for (s, t), c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (s, t), c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            out.append(f"{sign}{mag}x[{s},{t}]")
        text = "".join(out)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class CrystalElement:
    """A lattice point b = (b_{s,t}) stored densely in canonical order."""

    cartan: CartanType
    values: tuple[int, ...]

    def get(self, s: int, t: int) -> int:
        k = index_domain(self.cartan).position.get((s, t))
        return 0 if k is None else self.values[k]

    def __getitem__(self, st: Pair) -> int:
        return self.get(*st)

    @property
    def coords(self) -> dict[Pair, int]:
        pairs = index_domain(self.cartan).pairs
        return {st: v for st, v in zip(pairs, self.values) if v}

    @property
    def is_highest(self) -> bool:
        return not any(self.values)

    @property
    def size(self) -> int:
        return sum(self.values)

    def shifted(self, delta: Mapping[Pair, int]) -> "CrystalElement":
        """Add a coordinate update; out-of-domain positions are ignored."""
        pos = index_domain(self.cartan).position
        vals = list(self.values)
        for st, c in delta.items():
            k = pos.get(st)
            if k is not None:
                vals[k] += c
        if any(v < 0 for v in vals):
            raise ValueError(f"update {dict(delta)} makes {self} negative")
        return CrystalElement(self.cartan, tuple(vals))

    def to_json(self) -> dict:
        return {
            "cartan": str(self.cartan),
            "entries": [[s, t, v] for (s, t), v in sorted(self.coords.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CrystalElement":
        cartan = as_cartan(data["cartan"])
        coords: dict[Pair, int] = {}
        for s, t, v in data.get("entries", []):
            coords[(int(s), int(t))] = coords.get((int(s), int(t)), 0) + int(v)
        return make_element(cartan, coords)

    def tuple_str(self) -> str:
        return ",".join(map(str, self.values))

    def __str__(self) -> str:
        return f"({self.tuple_str()})"


def highest(cartan: CartanType | str) -> CrystalElement:
    cartan = as_cartan(cartan)
    return CrystalElement(cartan, (0,) * len(index_domain(cartan)))


def make_element(
    cartan: CartanType | str, coords: Mapping[Pair, int] | Sequence[int] = ()
) -> CrystalElement:
    """Build an element from a mapping (s,t)->v or a canonical-order tuple."""
    cartan = as_cartan(cartan)
    dom = index_domain(cartan)
    if isinstance(coords, Mapping):
        vals = [0] * len(dom)
        for (s, t), v in coords.items():
            v = int(v)
            if v < 0:
                raise ValueError(f"negative value {v} at ({s},{t})")
            if (s, t) not in dom:
                if v:
                    raise ValueError(f"({s},{t}) is outside the index domain of {cartan}")
                continue
            vals[dom.position[(s, t)]] = v
        return CrystalElement(cartan, tuple(vals))
    vals = tuple(int(v) for v in coords)
    if not vals:
        vals = (0,) * len(dom)
    if len(vals) != len(dom):
        raise ValueError(f"{cartan} needs {len(dom)} coordinates, got {len(vals)}")
    if any(v < 0 for v in vals):
        raise ValueError(f"negative coordinate in {vals}")
    return CrystalElement(cartan, vals)


def parse_tuple(cartan: CartanType | str, text: str) -> CrystalElement:
    parts = [p for p in text.replace("(", "").replace(")", "").split(",") if p.strip()]
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"not an integer tuple: {text!r}") from None
    return make_element(cartan, nums)


# ---------------------------------------------------------------- chains


@lru_cache(maxsize=None)
def membership_chains(cartan: CartanType) -> tuple[tuple[tuple[Pair, ...], ...], ...]:
    """Each chain is a sequence of links; a link is a tuple of pairs whose
    values are summed. A chain holds when the link sums weakly decrease."""
    n = cartan.rank
    fam = cartan.family
    chains: list[list[tuple[Pair, ...]]] = []

    def antidiag(k: int) -> list[tuple[Pair, ...]]:
        return [((s, k + 1 - s),) for s in range(1, k + 1)]

    if fam is Family.A:
        chains += [antidiag(k) for k in range(1, n + 1)]
    elif fam is Family.B:
        chains += [antidiag(k) for k in range(1, n)]
        chains += [[((k + r, n - r),) for r in range(n - k + 1)] for k in range(1, n + 1)]
        chains += [[((k, t),) for t in range(n - k + 1, n + 1)] for k in range(2, n + 1)]
    else:
        chains += [antidiag(k) for k in range(1, n - 1)]
        for k in range(1, n - 1):
            chain = [((k, n - 1), (k, n))]
            chain += [((k + r, n - 1 - r),) for r in range(1, n - k)]
            chains.append(chain)
        for k in range(2, n):
            chain = [((k, t),) for t in range(n - k, n - 1)]
            chain.append(((k, n - 1), (k, n)))
            chains.append(chain)
        # alternating spin chains; row s uses column n-1 or n by parity
        chains.append([((s, n - 1 if s % 2 else n),) for s in range(1, n)])
        chains.append([((s, n if s % 2 else n - 1),) for s in range(1, n)])
    return tuple(tuple(c) for c in chains)


def is_member_chains(b: CrystalElement) -> bool:
    for chain in membership_chains(b.cartan):
        sums = [sum(b.get(*st) for st in link) for link in chain]
        if any(x < y for x, y in zip(sums, sums[1:])):
            return False
    return True


# ---------------------------------------------------------------- boxed forms


@dataclass(frozen=True)
class BoxedForm:
    """Boxed functional with label j (optionally barred) at shift s."""

    cartan: CartanType
    label: int
    barred: bool
    shift: int

    def form(self) -> LinearForm:
        return boxed_linear_form(self.cartan, self.label, self.barred, self.shift)

    def __str__(self) -> str:
        bar = "~" if self.barred else ""
        return f"[{bar}{self.label}]_{self.shift}"


def boxed_linear_form(cartan: CartanType, j: int, barred: bool, s: int) -> LinearForm:
    """Boxed functional as an unrestricted linear form (any integer s)."""
    n = cartan.rank
    x = lambda a, c: LinearForm.var(a, c, n)  # noqa: E731
    fam = cartan.family
    if fam is Family.A:
        if barred or not 1 <= j <= n + 1:
            raise ValueError(f"bad type A label {j}")
        return x(s, j) - x(s + 1, j - 1)
    if fam is Family.B:
        if not 1 <= j <= n:
            raise ValueError(f"bad type B label {j}")
        if not barred:
            return x(s, j) - x(s + 1, j - 1)
        r = s + n - j + 1
        return x(r, j - 1) - x(r, j)
    if not barred:
        if not 1 <= j <= n:
            raise ValueError(f"bad type D label {j}")
        if j == n - 1:
            return x(s, n - 1) + x(s, n) - x(s + 1, n - 2)
        return x(s, j) - x(s + 1, j - 1)
    if not 1 <= j <= n + 1:
        raise ValueError(f"bad type D barred label {j}")
    if j <= n - 2:
        r = s + n - j
        return x(r, j - 1) - x(r, j)
    if j == n - 1:
        return x(s + 1, n - 2) - x(s + 1, n - 1) - x(s + 1, n)
    if j == n:
        return x(s, n - 1) - x(s + 1, n)
    return x(s, n)


def boxed_labels(cartan: CartanType) -> list[tuple[int, bool]]:
    n = cartan.rank
    if cartan.family is Family.A:
        return [(j, False) for j in range(1, n + 2)]
    if cartan.family is Family.B:
        return [(j, False) for j in range(1, n + 1)] + [(j, True) for j in range(n, 0, -1)]
    return [(j, False) for j in range(1, n + 1)] + [(j, True) for j in range(n + 1, 0, -1)]


@lru_cache(maxsize=None)
def boxed_forms(cartan: CartanType) -> tuple[BoxedForm, ...]:
    """All boxed functionals whose support can meet the index domain."""
    rows = index_domain(cartan).rows
    return tuple(
        BoxedForm(cartan, j, bar, s)
        for j, bar in boxed_labels(cartan)
        for s in range(1, rows + 1)
    )


@lru_cache(maxsize=None)
def _boxed_restricted(cartan: CartanType) -> tuple[tuple[BoxedForm, LinearForm], ...]:
    return tuple((f, f.form().restricted(cartan)) for f in boxed_forms(cartan))


def boxed_eval(f: BoxedForm, b: CrystalElement) -> int:
    if f.cartan != b.cartan:
        raise ValueError(f"form of type {f.cartan} applied to element of type {b.cartan}")
    return f.form().evaluate(b)


def is_member_boxed(b: CrystalElement) -> bool:
    return all(lf.evaluate(b) >= 0 for _, lf in _boxed_restricted(b.cartan))


def failing_boxed(b: CrystalElement) -> list[BoxedForm]:
    return [f for f, lf in _boxed_restricted(b.cartan) if lf.evaluate(b) < 0]


def is_member(b: CrystalElement) -> bool:
    return is_member_chains(b)


# ---------------------------------------------------------------- weight


def weight(b: CrystalElement) -> WeightVector:
    """wt(b) = -sum b_{s,t} alpha_t, returned in alpha coordinates."""
    n = b.cartan.rank
    cols = [0] * n
    for (s, t), v in b.coords.items():
        cols[t - 1] -= v
    return WeightVector(tuple(cols))


def elements_in_box(cartan: CartanType, bound: int) -> Iterable[CrystalElement]:
    """Every lattice point with all coordinates in [0, bound]."""
    from itertools import product

    size = len(index_domain(cartan))
    for vals in product(range(bound + 1), repeat=size):
        yield CrystalElement(cartan, vals)
