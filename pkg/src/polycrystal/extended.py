"""The extended crystal: Z-indexed families of elements and operators E(i,k), F(i,k)."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache

from . import bicrystal as bc
from .cartan import CartanType, Family, WeightVector, as_cartan
from .diamond import diamond
from .lattice import CrystalElement, highest, make_element, weight
from .tableaux import Partition, gamma, gamma_star, partition_family


@dataclass(frozen=True)
class ExtendedElement:
    """Finitely supported family k -> b^(k); absent slots are the highest element."""

    cartan: CartanType
    slots: tuple[tuple[int, CrystalElement], ...]

    @classmethod
    def of(cls, cartan: CartanType | str, slots: Mapping[int, CrystalElement]) -> "ExtendedElement":
        cartan = as_cartan(cartan)
        kept = []
        for k, b in slots.items():
            if b.cartan != cartan:
                raise ValueError(f"slot {k} has type {b.cartan}, expected {cartan}")
            if not b.is_highest:
                kept.append((int(k), b))
        return cls(cartan, tuple(sorted(kept, key=lambda kb: kb[0])))

    def component(self, k: int) -> CrystalElement:
        for j, b in self.slots:
            if j == k:
                return b
        return highest(self.cartan)

    def replaced(self, k: int, b: CrystalElement) -> "ExtendedElement":
        d = dict(self.slots)
        d[k] = b
        return ExtendedElement.of(self.cartan, d)

    @property
    def support(self) -> list[int]:
        return [k for k, _ in self.slots]

    def to_json(self) -> dict:
        return {
            "cartan": str(self.cartan),
            "slots": {str(k): list(b.values) for k, b in self.slots},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ExtendedElement":
        cartan = as_cartan(data["cartan"])
        slots = {}
        for k, v in data.get("slots", {}).items():
            if isinstance(v, Mapping):
                slots[int(k)] = CrystalElement.from_json({"cartan": str(cartan), **v})
            else:
                slots[int(k)] = make_element(cartan, v)
        return cls.of(cartan, slots)

    def display(self, underline: bool = True) -> str:
        """Slots listed from high k to low k; the 0-slot is underlined."""
        ks = self.support + [0, 1]
        lo, hi = min(ks), max(ks)
        parts = ["…"]
        for k in range(hi, lo - 1, -1):
            b = self.component(k)
            text = "1" if b.is_highest else str(b)
            if k == 0 and underline:
                text = "".join(ch + "̲" for ch in text)
            parts.append(text)
        parts.append("…")
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class ExtendedLabel:
    base: Partition
    starred: bool

    def __str__(self) -> str:
        return f"{self.base}{'*' if self.starred else ''}"

    @classmethod
    def parse(cls, text: str) -> "ExtendedLabel":
        return cls(Partition.parse(text), text.strip().endswith("*"))


def label_leq(a: ExtendedLabel, b: ExtendedLabel) -> bool:
    """Unstarred below starred; containment among unstarred, reverse among starred."""
    if a.starred != b.starred:
        return not a.starred
    if not a.starred:
        return b.base.contains(a.base)
    return a.base.contains(b.base)


@lru_cache(maxsize=None)
def extended_family(cartan: CartanType, i: int) -> tuple[ExtendedLabel, ...]:
    usual = [ExtendedLabel(lam, False) for lam in partition_family(cartan, i, False)]
    star = [ExtendedLabel(mu, True) for mu in partition_family(cartan, i, True)]
    return tuple(usual + star)


def sigma_hat(x: ExtendedElement, i: int, k: int, label: ExtendedLabel) -> int:
    if label.starred:
        return gamma_star(x.component(k + 1), i, label.base)
    return gamma(x.component(k), i, label.base)


def eps_hat(x: ExtendedElement, i: int, k: int) -> int:
    return bc.epsilon(x.component(k), i) - bc.epsilon_star(x.component(k + 1), i)


@dataclass(frozen=True)
class HatSelection:
    value: int
    least: ExtendedLabel
    greatest: ExtendedLabel


def select_hat(x: ExtendedElement, i: int, k: int) -> HatSelection:
    """Least and greatest maximizers of sigma_hat in the label poset."""
    vals = {lab: sigma_hat(x, i, k, lab) for lab in extended_family(x.cartan, i)}
    top = max(vals.values())
    best = [lab for lab, v in vals.items() if v == top]
    least = [a for a in best if all(label_leq(a, c) for c in best)]
    greatest = [a for a in best if all(label_leq(c, a) for c in best)]
    if len(least) != 1 or len(greatest) != 1:
        raise AssertionError(f"maximizers of sigma_hat have no least/greatest element: {best}")
    return HatSelection(top, least[0], greatest[0])


def F_hat(x: ExtendedElement, i: int, k: int) -> ExtendedElement:
    if eps_hat(x, i, k) >= 0:
        return x.replaced(k, bc.f(x.component(k), i, False))
    nxt = bc.e(x.component(k + 1), i, True)
    assert nxt is not None
    return x.replaced(k + 1, nxt)


def E_hat(x: ExtendedElement, i: int, k: int) -> ExtendedElement:
    if eps_hat(x, i, k) > 0:
        cur = bc.e(x.component(k), i, False)
        assert cur is not None
        return x.replaced(k, cur)
    return x.replaced(k + 1, bc.f(x.component(k + 1), i, True))


def weight_hat(x: ExtendedElement) -> WeightVector:
    total = WeightVector.zero(x.cartan.rank)
    for k, b in x.slots:
        w = weight(b)
        total = total + (w if k % 2 == 0 else -w)
    return total


def apply_hat_word(x: ExtendedElement, word: Iterable[tuple[str, int, int]]) -> list[ExtendedElement]:
    out = []
    for kind, i, k in word:
        x = F_hat(x, i, k) if kind == "F" else E_hat(x, i, k)
        out.append(x)
    return out


def parse_hat_word(text: str) -> list[tuple[str, int, int]]:
    import re

    toks = re.findall(r"([EF])\(\s*(\d+)\s*,\s*(-?\d+)\s*\)", text)
    rest = re.sub(r"[EF]\(\s*\d+\s*,\s*-?\d+\s*\)", "", text).replace(",", "").strip()
    if rest or not toks:
        raise ValueError(f"bad extended operator word {text!r}")
    return [(kind, int(i), int(k)) for kind, i, k in toks]


# ---------------------------------------------------------------- type-A layout


def type_a_relabel(cartan: CartanType, label: ExtendedLabel) -> int:
    """Integer label: |lambda| for unstarred, n+2-|mu| for starred."""
    if cartan.family is not Family.A:
        raise ValueError("integer relabelling is only defined for type A")
    return cartan.rank + 2 - label.base.size if label.starred else label.base.size


def extended_configuration(cartan: CartanType, window: Iterable[int]) -> dict[tuple[int, int, int], tuple[int, int]]:
    """Placement of b^(k)_{s,t} for k in the window, keyed by (k, s, t)."""
    if cartan.family is not Family.A:
        raise ValueError(f"the extended layout is defined for type A only, not {cartan}")
    from .cartan import index_domain

    n = cartan.rank
    out = {}
    for k in window:
        for s, t in index_domain(cartan):
            x = -s - 2 * t + 3 - k * n
            y = s if k % 2 == 0 else n - s + 2
            out[(k, s, t)] = (x, y)
    return out


def extended_diamond_sum(
    x: ExtendedElement, k: int, s: int, t: int, star: bool, window: Iterable[int]
) -> int:
    """Diamond sum read off the planar layout rather than from the slot directly."""
    layout = extended_configuration(x.cartan, window)
    board: dict[tuple[int, int], int] = {}
    for (j, u, v), pt in layout.items():
        if pt in board:
            raise AssertionError(f"layout collision at {pt}")
        board[pt] = x.component(j).get(u, v)
    return sum(
        c * board[layout[(k, u, v)]]
        for (u, v), c in diamond(x.cartan, s, t, star).members
    )
