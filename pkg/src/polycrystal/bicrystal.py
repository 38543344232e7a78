"""The usual and star crystal structures on the lattice model, plus jump."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanType, pair_with_weight
from .lattice import CrystalElement, LinearForm, is_member_chains, weight
from .tableaux import (
    Partition,
    gamma_form,
    gamma_star_form,
    partition_family,
    tableau,
)


@dataclass(frozen=True)
class SelectorResult:
    value: int
    argmin: Partition
    argmax: Partition


@dataclass(frozen=True)
class MoveVector:
    """Signed unit updates sum v(I_T(cell)) with v(s,t) = e_{s,t} - e_{s-1,t}."""

    updates: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.updates)

    def negated(self) -> "MoveVector":
        return MoveVector(tuple((k, -c) for k, c in self.updates))


@lru_cache(maxsize=None)
def move_vector(cartan: CartanType, i: int, star: bool, lam: Partition) -> MoveVector:
    tab = tableau(cartan, i, star)
    d: dict[tuple[int, int], int] = {}
    for cell in Partition(lam).cells:
        a, c = tab.index_of(cell)
        d[(a, c)] = d.get((a, c), 0) + 1
        if a > 1:
            d[(a - 1, c)] = d.get((a - 1, c), 0) - 1
    return MoveVector(tuple(sorted((k, v) for k, v in d.items() if v)))


@lru_cache(maxsize=None)
def _family_forms(cartan: CartanType, i: int, star: bool) -> tuple[tuple[Partition, LinearForm], ...]:
    fam = partition_family(cartan, i, star)
    form = gamma_star_form if star else gamma_form
    return tuple((lam, form(cartan, i, lam)) for lam in fam)


def sums(b: CrystalElement, i: int, star: bool) -> dict[Partition, int]:
    """All Sigma_lambda (or Sigma*_lambda) values for the family of i."""
    return {lam: f.evaluate(b) for lam, f in _family_forms(b.cartan, i, star)}


def _require_member(b: CrystalElement) -> None:
    if not is_member_chains(b):
        raise ValueError(f"{b} is not an element of B(infinity) for {b.cartan}")


def _check_i(b: CrystalElement, i: int) -> None:
    if not 1 <= i <= b.cartan.rank:
        raise ValueError(f"index {i} out of range for {b.cartan}")


def select(b: CrystalElement, i: int, star: bool = False) -> SelectorResult:
    _check_i(b, i)
    return _select(b, i, star)


@lru_cache(maxsize=1 << 18)
def _select(b: CrystalElement, i: int, star: bool) -> SelectorResult:
    vals = sums(b, i, star)
    top = max(vals.values())
    best = [lam for lam, v in vals.items() if v == top]
    lo = hi = best[0]
    for lam in best[1:]:
        lo = lo.intersection(lam)
        hi = hi.union(lam)
    return SelectorResult(top, lo, hi)


def epsilon(b: CrystalElement, i: int) -> int:
    return select(b, i, False).value


def epsilon_star(b: CrystalElement, i: int) -> int:
    return select(b, i, True).value


def eps(b: CrystalElement, i: int, star: bool = False) -> int:
    return select(b, i, star).value


def phi(b: CrystalElement, i: int, star: bool = False) -> int:
    return eps(b, i, star) + pair_with_weight(b.cartan, i, weight(b))


def f(b: CrystalElement, i: int, star: bool = False) -> CrystalElement:
    _require_member(b)
    sel = select(b, i, star)
    return b.shifted(move_vector(b.cartan, i, star, sel.argmin).as_dict())


def e(b: CrystalElement, i: int, star: bool = False) -> CrystalElement | None:
    """Raising operator; None plays the role of the null element."""
    _require_member(b)
    sel = select(b, i, star)
    if sel.value <= 0:
        return None
    return b.shifted(move_vector(b.cartan, i, star, sel.argmax).negated().as_dict())


def jump(b: CrystalElement, i: int) -> int:
    return epsilon(b, i) + epsilon_star(b, i) + pair_with_weight(b.cartan, i, weight(b))


def apply_word(b: CrystalElement, word: str) -> list[CrystalElement | None]:
    """Apply operators like "f1,e2*,f3" left to right; stops at the first null."""
    out: list[CrystalElement | None] = []
    cur: CrystalElement | None = b
    for tok in parse_word(word):
        kind, i, star = tok
        cur = f(cur, i, star) if kind == "f" else e(cur, i, star)
        out.append(cur)
        if cur is None:
            break
    return out


def parse_word(word: str) -> list[tuple[str, int, bool]]:
    toks = []
    for raw in word.split(","):
        raw = raw.strip()
        if not raw:
            continue
        star = raw.endswith("*")
        core = raw.rstrip("*")
        if len(core) < 2 or core[0] not in "ef" or not core[1:].isdigit():
            raise ValueError(f"bad operator {raw!r}")
        toks.append((core[0], int(core[1:]), star))
    return toks


# ---------------------------------------------------------------- strict nodes


def strict_removable(lam: Partition) -> list[tuple[int, int]]:
    """Cells whose removal leaves a strict partition, ordered by row."""
    out = []
    for r in range(1, lam.length + 1):
        cell = (r, lam.part(r))
        parts = list(lam)
        parts[r - 1] -= 1
        if all(a >= b for a, b in zip(parts, parts[1:])) and Partition(parts).is_strict:
            out.append(cell)
    return out


def strict_addable(lam: Partition, shape: Partition | None = None) -> list[tuple[int, int]]:
    """Cells whose addition keeps lam strict; optionally only those in shape."""
    out = []
    for r in range(1, lam.length + 2):
        cell = (r, lam.part(r) + 1)
        parts = list(lam) + [0]
        parts[r - 1] += 1
        if all(a >= b for a, b in zip(parts, parts[1:])) and Partition(parts).is_strict:
            if shape is None or shape.has_cell(*cell):
                out.append(cell)
    return out


def shifted_nodes(nodes: list[tuple[int, int]], addable: bool) -> list[tuple[int, int]]:
    """R'_p = (s_p, t_{p+1} + s_{p+1} - s_p) and A'_q = (u_{q+1}, v_q + u_q - u_{q+1})."""
    out = []
    for (s0, t0), (s1, t1) in zip(nodes, nodes[1:]):
        out.append((s1, t0 + s0 - s1) if addable else (s0, t1 + s1 - s0))
    return out
