"""Antichain parsing and text, JSON and DOT rendering."""

from __future__ import annotations

import json
import math
import re

from . import roots as rs
from .bijection import MatchingDiagram
from .weyl import NoncrossingLattice, format_cycles

DEFAULT_COLORS = {"antichain": "red", "L": "lightblue", "S": "palegreen", "LS": "khaki"}

_INTERVAL = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def _lookup(P: rs.RootPoset) -> dict[str, int]:
    names = {}
    for e in range(P.size):
        names[P.label(e)] = e
        names["".join(map(str, P.roots[e].coeffs))] = e
    for i, e in enumerate(P.simple, start=1):
        names[f"a{i}"] = e
        names[f"alpha{i}"] = e
    return names


def _from_item(P: rs.RootPoset, item) -> int:
    if isinstance(item, dict) and "coeffs" in item:
        return P.index_of(item["coeffs"])
    if isinstance(item, str):
        return parse_root(P, item)
    raise ValueError(f"cannot read root {json.dumps(item)}")


def parse_root(P: rs.RootPoset, token: str) -> int:
    tok = token.strip()
    m = _INTERVAL.fullmatch(tok)
    if m:
        if P.family != "A":
            raise ValueError(f"interval {tok} only names roots of type A")
        try:
            return P.from_interval(int(m.group(1)), int(m.group(2)))
        except ValueError:
            raise ValueError(f"unknown root {tok} in {P.type_label}") from None
    names = _lookup(P)
    if tok.replace(" ", "") in names:
        return names[tok.replace(" ", "")]
    raise ValueError(f"unknown root {tok!r} in {P.type_label}")


def parse_antichain(P: rs.RootPoset, text: str | None) -> tuple[int, ...]:
    """Read an antichain from user text and validate it.

    Accepted forms: a JSON list of ``{"coeffs": [...]}`` objects or root names;
    intervals such as ``[1,3],[3,4]`` for type A; comma or space separated
    root names (``e1-e3``, ``e2+e6``, coefficient strings like ``0121``,
    ``a1`` for a simple root).  Empty text, ``{}`` and ``[]`` mean the empty
    antichain.
    """
    text = (text or "").strip()
    if text in ("", "{}", "[]", "∅"):
        return ()
    elems = None
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = None
        if isinstance(data, list) and all(isinstance(x, (dict, str)) for x in data):
            elems = [_from_item(P, x) for x in data]
    if elems is None:
        body = text.strip("{}").strip()
        if P.family == "A" and "[" in body:
            tokens = _INTERVAL.findall(body)
            leftover = _INTERVAL.sub("", body).replace(",", "").strip()
            if leftover:
                raise ValueError(f"cannot read {leftover.split()[0]!r} as an interval")
            elems = [parse_root(P, f"[{a},{b}]") for a, b in tokens]
        else:
            elems = [parse_root(P, t) for t in re.split(r"[,\s]+", body) if t]
    if len(set(elems)) != len(elems):
        raise ValueError("a root is listed twice")
    for k, x in enumerate(elems):
        for y in elems[k + 1:]:
            if P.base.leq(x, y) or P.base.leq(y, x):
                raise ValueError(f"not an antichain: {P.label(x)} and {P.label(y)} are comparable")
    return tuple(sorted(elems))


def format_antichain(P: rs.RootPoset, A) -> str:
    """Comma separated names; type A intervals in lexicographic order."""
    A = sorted(A, key=(lambda e: P.interval(e)) if P.family == "A" else None)
    return ",".join(P.label(e) for e in A) if A else "{}"


def antichain_to_json(P: rs.RootPoset, A) -> list:
    if P.family == "A":
        return [P.label(e) for e in sorted(A, key=P.interval)]
    return [{"coeffs": list(P.roots[e].coeffs)} for e in A]


def root_to_json(P: rs.RootPoset, e: int) -> dict:
    d = P.roots[e].to_json()
    d["label"] = P.label(e)
    d["height"] = P.roots[e].height
    return d


# -- DOT ------------------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace('"', r"\"") + '"'


def hasse_dot(P: rs.RootPoset, antichain=(), subsets=(), colors=None) -> str:
    """Hasse diagram with simple roots at the bottom.

    Members of ``antichain`` get a coloured border; ``subsets`` may contain
    ``"L"`` and ``"S"`` to fill the distinguished subsets.
    """
    colors = {**DEFAULT_COLORS, **(colors or {})}
    marked = set(antichain)
    fills = {}
    for flag in subsets:
        sub = {"L": P.subset_L, "S": P.subset_S}.get(flag)
        if sub is None:
            raise ValueError(f"subset {flag} is not defined for {P.type_label}")
        for e in sub:
            fills[e] = "LS" if e in fills and fills[e] != flag else flag
    lines = [f"digraph {_q(P.type_label)} {{", "  rankdir=BT;", "  node [shape=box, style=filled, fillcolor=white];"]
    for i in range(P.base.max_rank + 1):
        level = " ".join(f"n{e};" for e in P.base.level(i))
        lines.append(f"  {{ rank=same; {level} }}")
    for e in range(P.size):
        attrs = [f"label={_q(P.label(e))}"]
        if e in fills:
            attrs.append(f"fillcolor={_q(colors[fills[e]])}")
        if e in marked:
            attrs.append(f"color={_q(colors['antichain'])}, penwidth=3")
        lines.append(f"  n{e} [{', '.join(attrs)}];")
    for x, y in sorted(P.base.covers):
        lines.append(f"  n{x} -> n{y} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def nc_dot(NC: NoncrossingLattice) -> str:
    """Hasse diagram of a noncrossing partition lattice."""
    name = {w: f"w{k}" for k, w in enumerate(NC.elements)}
    lines = ["digraph NC {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for w in NC.elements:
        lines.append(f"  {name[w]} [label={_q(format_cycles(w))}];")
    for u, w in NC.covers():
        lines.append(f"  {name[u]} -> {name[w]} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_dot(D: MatchingDiagram, title: str = "diagram") -> str:
    """Circle drawing for ``neato -n``; position ``p`` sits at ``90 - 360 (p + 1/2) / N`` degrees."""
    total = D.npos
    lines = [f"graph {_q(title)} {{", "  node [shape=circle, fontsize=10, width=0.5, fixedsize=true];"]
    for p, (v, s) in enumerate(D.vertices):
        ang = math.pi / 2 - 2 * math.pi * (p + 0.5) / total
        x, y = 200 * math.cos(ang), 200 * math.sin(ang)
        lines.append(f'  v{p} [label="{v}^({s})", pos="{x:.2f},{y:.2f}!"];')
    for a, b in sorted(D.chords):
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
