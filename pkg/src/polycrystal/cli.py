"""Command-line interface: ``polycrystal <command> ...``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bicrystal as bc
from .cartan import CartanType, Family
from .diamond import diamond_sum, render
from .extended import ExtendedElement, apply_hat_word, parse_hat_word
from .lattice import (
    CrystalElement,
    failing_boxed,
    is_member,
    parse_tuple,
)
from .pbw import parse_pbw, pbw_to_polyhedral, polyhedral_to_pbw
from .tableaux import tableau
from .verify import SUITES, EnumerationSpec, enumerate_elements, run_suite, sorted_elements

EXIT_INVALID = 1
EXIT_NULL = 2
EXIT_INVARIANT = 3


class InputError(ValueError):
    pass


# ---------------------------------------------------------------- graph slices


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    label: int
    star: bool


@dataclass
class GraphSlice:
    cartan: str
    vertices: list[str]
    edges: list[Edge]

    def to_json(self) -> dict:
        return {
            "cartan": self.cartan,
            "vertices": self.vertices,
            "edges": [
                {"from": e.source, "to": e.target, "label": e.label, "star": e.star}
                for e in self.edges
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GraphSlice":
        edges = [Edge(d["from"], d["to"], int(d["label"]), bool(d["star"])) for d in data["edges"]]
        return cls(data["cartan"], list(data["vertices"]), edges)

    def to_dot(self) -> str:
        lines = [f'digraph "{self.cartan}" {{']
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for e in self.edges:
            name = f"{e.label}*" if e.star else str(e.label)
            style = ", style=dashed" if e.star else ""
            lines.append(f'  "{e.source}" -> "{e.target}" [label="{name}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dot(cls, text: str) -> "GraphSlice":
        head = re.search(r'digraph\s+"([^"]*)"', text)
        if head is None:
            raise InputError("not a graph produced by this tool")
        vertices, edges = [], []
        for line in text.splitlines():
            m = re.match(r'\s*"([^"]*)"\s*->\s*"([^"]*)"\s*\[label="(\d+)(\*?)"', line)
            if m:
                edges.append(Edge(m[1], m[2], int(m[3]), m[4] == "*"))
                continue
            m = re.match(r'\s*"([^"]*)";\s*$', line)
            if m:
                vertices.append(m[1])
        return cls(head[1], vertices, edges)


def graph_slice(cartan: CartanType, depth: int, structures: tuple[bool, ...] = (False,)) -> GraphSlice:
    elems = sorted_elements(enumerate_elements(EnumerationSpec(cartan, depth), method="bfs"))
    present = set(elems)
    edges = []
    for b in elems:
        for star in structures:
            for i in cartan.indices:
                c = bc.f(b, i, star)
                if c in present:
                    edges.append(Edge(b.tuple_str(), c.tuple_str(), i, star))
    return GraphSlice(str(cartan), [b.tuple_str() for b in elems], edges)


# ---------------------------------------------------------------- input helpers


def _load_json(text: str) -> dict:
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _cartan(args: argparse.Namespace) -> CartanType:
    if not getattr(args, "cartan", None):
        raise InputError("--cartan is required")
    return CartanType.parse(args.cartan)


def _element(args: argparse.Namespace) -> CrystalElement:
    if args.element:
        return CrystalElement.from_json(_load_json(args.element))
    if args.tuple:
        return parse_tuple(_cartan(args), args.tuple)
    raise InputError("give --tuple (with --cartan) or --element")


def _require_member(b: CrystalElement) -> None:
    if not is_member(b):
        raise InputError(f"{b} is not an element of B(infinity) for {b.cartan}")


def _emit(args: argparse.Namespace, payload: object, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _pair(text: str) -> tuple[int, int]:
    try:
        s, t = (int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"expected s,t but got {text!r}") from None
    return s, t


# ---------------------------------------------------------------- commands


def cmd_check(args: argparse.Namespace) -> int:
    b = _element(args)
    ok = is_member(b)
    bad = [str(f) for f in failing_boxed(b)]
    payload = {"element": b.to_json(), "member": ok, "failing": bad}
    text = "member" if ok else "not a member; failing: " + ", ".join(bad)
    _emit(args, payload, text)
    return 0


def cmd_apply(args: argparse.Namespace) -> int:
    b = _element(args)
    _require_member(b)
    results = bc.apply_word(b, args.op)
    steps = [None if r is None else r.to_json() for r in results]
    if args.json:
        print(json.dumps({"start": b.to_json(), "steps": steps}, ensure_ascii=False))
    else:
        for r in results:
            print("null" if r is None else r.tuple_str())
    return EXIT_NULL if results and results[-1] is None else 0


def cmd_tableau(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    tab = tableau(cartan, args.index, args.star)
    payload = {
        "cartan": str(cartan),
        "i": args.index,
        "star": args.star,
        "shape": list(tab.shape),
        "cells": {f"{r},{c}": tab[(r, c)].token() for r, c in tab.shape.cells},
    }
    _emit(args, payload, tab.render())
    return 0


def cmd_diamond(args: argparse.Namespace) -> int:
    b = _element(args)
    s, t = _pair(args.at)
    value = diamond_sum(b, s, t, args.star)
    payload = {"at": [s, t], "star": args.star, "value": value}
    text = str(value)
    if args.render:
        text += "\n" + render(b, (s, t), args.star)
    _emit(args, payload, text)
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    src, dst = args.source, args.target
    if src == dst:
        raise InputError("--from and --to must differ")
    cartan = _cartan(args) if not args.element else CartanType.parse(_load_json(args.element)["cartan"])
    if cartan.family is not Family.A:
        raise InputError("PBW conversion is only available for type A")
    if src == "pbw":
        if args.element:
            data = _load_json(args.element)
            values = data.get("pbw", data.get("values"))
        elif args.tuple:
            values = [int(v) for v in args.tuple.strip("()").split(",")]
        else:
            raise InputError("give --tuple or --element")
        b = pbw_to_polyhedral(parse_pbw(cartan, values))
        _emit(args, b.to_json(), b.tuple_str())
    else:
        b = _element(args)
        _require_member(b)
        c = polyhedral_to_pbw(b)
        _emit(args, {"cartan": str(cartan), "pbw": list(c.printed())}, ",".join(map(str, c.printed())))
    return 0


def cmd_extended(args: argparse.Namespace) -> int:
    if not args.element:
        raise InputError("--element with slots is required")
    x = ExtendedElement.from_json(_load_json(args.element))
    for _, b in x.slots:
        _require_member(b)
    results = apply_hat_word(x, parse_hat_word(args.op)) if args.op else []
    if args.json:
        print(json.dumps({"start": x.to_json(), "steps": [r.to_json() for r in results]}, ensure_ascii=False))
    else:
        print(x.display())
        for r in results:
            print(r.display())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    if args.depth is None or args.depth < 0:
        raise InputError("--depth must be a nonnegative integer")
    names = SUITES if args.suite == "all" else [args.suite]
    reports = [run_suite(name, EnumerationSpec(cartan, args.depth), args.seed) for name in names]
    out = [r.to_json() for r in reports]
    print(json.dumps(out[0] if len(out) == 1 else out, ensure_ascii=False, indent=2))
    return 0 if all(r.passed for r in reports) else 1


def cmd_graph(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    if args.depth is None or args.depth < 0:
        raise InputError("--depth must be a nonnegative integer")
    structures = (False, True) if args.both else ((True,) if args.star else (False,))
    g = graph_slice(cartan, args.depth, structures)
    if args.json:
        print(json.dumps(g.to_json(), ensure_ascii=False))
    else:
        sys.stdout.write(g.to_dot())
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polycrystal", description="Polyhedral bicrystal toolkit for B(infinity).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, element: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--cartan", help="Cartan type such as A3, B3, D4")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if element:
            sp.add_argument("--tuple", help="canonical coordinate tuple, comma separated")
            sp.add_argument("--element", help="element JSON (prefix with @ to read a file)")
        return sp

    add("check", cmd_check, "test membership")
    sp = add("apply", cmd_apply, "apply an operator word such as f1,e2*,f3")
    sp.add_argument("--op", required=True)
    sp = add("tableau", cmd_tableau, "print the tableau T_i or T_i*", element=False)
    sp.add_argument("--index", "-i", type=int, required=True)
    sp.add_argument("--star", action="store_true")
    sp = add("diamond", cmd_diamond, "evaluate a sliding diamond")
    sp.add_argument("--at", required=True, help="position s,t")
    sp.add_argument("--star", action="store_true")
    sp.add_argument("--render", action="store_true")
    sp = add("convert", cmd_convert, "convert between PBW data and polyhedral coordinates")
    sp.add_argument("--from", dest="source", choices=["pbw", "poly"], required=True)
    sp.add_argument("--to", dest="target", choices=["pbw", "poly"], required=True)
    sp = add("extended", cmd_extended, "apply words like F(1,0)E(2,1) to an extended element")
    sp.add_argument("--op", default="")
    sp = add("verify", cmd_verify, "run a check suite", element=False)
    sp.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("graph", cmd_graph, "export a depth-truncated crystal graph", element=False)
    sp.add_argument("--depth", type=int, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--star", action="store_true")
    group.add_argument("--both", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    sys.stdout.reconfigure(encoding="utf-8", line_buffering=True)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else 0
    try:
        return args.func(args)
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
