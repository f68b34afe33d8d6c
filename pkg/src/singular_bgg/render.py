"""Text, JSON and DOT renderings.  All output is deterministic."""

from __future__ import annotations

import json

from .lsword import NON_STANDARD, HasseGraph, ls_length, ls_to_diagram
from .orbit import SingularCharacter, crossed_orbit, orbit_weights
from .penrose import (
    DegreeDiagram,
    SingularBGGComplex,
    SpectralPage,
    nonstandard_arrows,
    operator_order,
)

SCHEMA = 1
FORMATS = ("text", "json", "dot")


def json_document(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA, **payload}, indent=2, ensure_ascii=False) + "\n"


def _q(s) -> str:
    return '"' + str(s).replace('"', '\\"') + '"'


def _dot(name: str, nodes: list[tuple[str, str]], edges: list[tuple[str, str, dict]]) -> str:
    out = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box];"]
    for key, label in nodes:
        out.append(f"  {_q(key)} [label={_q(label)}];")
    for a, b, attrs in edges:
        extra = "".join(f", {k}={_q(v)}" for k, v in attrs.items())
        out.append(f"  {_q(a)} -> {_q(b)} [{extra[2:]}];" if extra else f"  {_q(a)} -> {_q(b)};")
    out.append("}")
    return "\n".join(out) + "\n"


def _edge_attrs(a) -> dict:
    attrs = {}
    if a.label is not None:
        attrs["label"] = str(a.label)
    if a.kind == NON_STANDARD:
        attrs["style"] = "dashed"
        attrs["label"] = f"order={a.order}"
    return attrs


# --------------------------------------------------------------------------


def render_hasse(graph: HasseGraph, n: int, fmt: str = "text") -> str:
    if fmt == "json":
        return json_document(
            {
                "kind": "hasse",
                "rank": n,
                "nodes": [
                    {
                        "word": str(nd.word),
                        "length": ls_length(nd.word),
                        "diagram": list(ls_to_diagram(nd.word).ydiagram()),
                        "weight": str(nd.weight),
                        "position": list(nd.pos),
                    }
                    for nd in graph.nodes
                ],
                "arrows": [{"src": str(a.src), "dst": str(a.dst), "label": str(a.label)} for a in graph.arrows],
            }
        )
    if fmt == "dot":
        nodes = [(str(nd.word), f"{nd.word}\\n{ls_to_diagram(nd.word)}\\n{nd.weight}") for nd in graph.nodes]
        edges = [(str(a.src), str(a.dst), _edge_attrs(a)) for a in graph.arrows]
        return _dot(f"hasse_{n}", nodes, edges)
    rows = [(str(ls_length(nd.word)), str(nd.word), str(ls_to_diagram(nd.word)), str(nd.weight)) for nd in graph.nodes]
    out = [f"regular Hasse diagram, rank {n}: {len(graph.nodes)} nodes, {len(graph.arrows)} arrows"]
    out += _table([("length", "word", "diagram", "weight")] + rows)
    out.append("arrows:")
    out += [f"  {a.src} -> {a.dst}  {a.label}" for a in graph.arrows]
    return "\n".join(out) + "\n"


def _table(rows: list[tuple[str, ...]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def _header(sc: SingularCharacter) -> str:
    return f"lambda+rho = {sc.lambda_plus_rho}, k = {sc.k} ({sc.kind} kind)"


def render_orbit(sc: SingularCharacter, graph: HasseGraph, fmt: str = "text", crossed: bool = False) -> str:
    weights = orbit_weights(sc)
    tags = crossed_orbit(sc) if crossed else None
    if fmt == "json":
        payload = {
            "kind": "orbit",
            "rank": sc.n,
            "k": sc.k,
            "lambda_plus_rho": str(sc.lambda_plus_rho),
            "objects": [{"word": str(w), "weight": str(mu)} for w, mu in weights.items()],
            "arrows": [
                {"src": str(a.src), "dst": str(a.dst), "label": str(a.label)} for a in graph.arrows
            ],
        }
        if tags is not None:
            payload["all_words"] = [{"word": str(w), "weight": str(mu), "status": s} for w, (mu, s) in tags.items()]
        return json_document(payload)
    if fmt == "dot":
        nodes = [(str(w), f"{w}\\n{mu}") for w, mu in weights.items()]
        edges = [(str(a.src), str(a.dst), _edge_attrs(a)) for a in graph.arrows]
        return _dot("orbit", nodes, edges)
    out = [f"singular orbit: {_header(sc)}: {len(weights)} objects, {len(graph.arrows)} standard arrows"]
    out += _table([(str(w), str(mu)) for w, mu in weights.items()])
    out.append("arrows:")
    out += [f"  {weights[a.src]} -> {weights[a.dst]}  ({a.src} -> {a.dst}, {a.label})" for a in graph.arrows]
    if tags is not None:
        out.append("all W^p words:")
        out += _table([(str(w), str(mu), s) for w, (mu, s) in tags.items()])
    return "\n".join(out) + "\n"


def _cell(items) -> str:
    return " + ".join(str(x) for x in items) if items else "0"


def render_spectral(page: SpectralPage, sc: SingularCharacter, fmt: str = "text") -> str:
    nonstd = nonstandard_arrows(sc)
    weights = orbit_weights(sc)
    if fmt == "json":
        return json_document(
            {
                "kind": "spectral",
                "rank": sc.n,
                "k": sc.k,
                "lambda_plus_rho": str(sc.lambda_plus_rho),
                "entries": [
                    {"p": p, "q": q, "weight": str(mu), "source": str(src)}
                    for (p, q), cell in sorted(page.entries.items())
                    for mu, src in cell
                ],
                "differentials": [
                    {"from": list(page.position[a]), "to": list(page.position[b]), "src": str(a), "dst": str(b)}
                    for a, b in page.arrows
                ],
                "non_standard": [
                    {"src": str(weights[a]), "dst": str(weights[b]), "order": operator_order(weights[a], weights[b])}
                    for a, b in nonstd
                ],
            }
        )
    if fmt == "dot":
        nodes, edges = [], []
        for (p, q), cell in sorted(page.entries.items()):
            nodes.append((f"{p},{q}", f"E1[{p},{q}]\\n{_cell(mu for mu, _ in cell)}"))
        for (a, b) in page.positional_arrows():
            edges.append((f"{a[0]},{a[1]}", f"{b[0]},{b[1]}", {}))
        return _dot("spectral", nodes, edges)
    out = [f"E1 page: {_header(sc)}"]
    out += spectral_grid_lines(page)
    if nonstd:
        out.append("non-standard operators:")
        out += [f"  {weights[a]} -> {weights[b]}  (order {operator_order(weights[a], weights[b])})" for a, b in nonstd]
    return "\n".join(out) + "\n"


def spectral_grid_lines(page: SpectralPage) -> list[str]:
    """Rows q = max..0, columns p = 0..max; "->" marks a d_1 differential."""
    arrows = set(page.positional_arrows())
    cols = page.max_p + 1
    cells = {
        (p, q): _cell([mu for mu, _ in page.entries.get((p, q), [])]) for p in range(cols) for q in range(page.max_q + 1)
    }
    widths = [max(len(cells[(p, q)]) for q in range(page.max_q + 1)) for p in range(cols)]
    lines = []
    for q in range(page.max_q, -1, -1):
        parts = [f"q={q}  "]
        for p in range(cols):
            parts.append(cells[(p, q)].ljust(widths[p]))
            if p + 1 < cols:
                parts.append(" -> " if ((p, q), (p + 1, q)) in arrows else "    ")
        lines.append("".join(parts).rstrip())
    return lines


def render_degrees(dd: DegreeDiagram, fmt: str = "text") -> str:
    sc = dd.character
    if fmt == "json":
        return json_document(
            {
                "kind": "degrees",
                "rank": sc.n,
                "k": sc.k,
                "degrees": {str(t): d for t, d in dd.degrees.items()},
                "solid": [[str(a), str(b)] for a, b in dd.solid],
                "dashed": [[str(a), str(b)] for a, b in dd.dashed],
            }
        )
    if fmt == "dot":
        nodes = [(str(t), f"{t}\\n{'x' if d is None else d}") for t, d in dd.degrees.items()]
        edges = [(str(a), str(b), {}) for a, b in dd.solid]
        edges += [(str(a), str(b), {"style": "dashed"}) for a, b in dd.dashed]
        return _dot(f"degrees_{sc.n}_{sc.k}", nodes, edges)
    levels: dict[int, list[str]] = {}
    for t, d in sorted(dd.degrees.items(), key=lambda item: (ls_length(item[0]), item[0])):
        levels.setdefault(ls_length(t), []).append(f"{t}:{'x' if d is None else d}")
    out = [f"surviving degrees, rank {sc.n}, k = {sc.k} (x = no direct image)"]
    out += [f"  {length:>2}  " + "  ".join(items) for length, items in levels.items()]
    out.append("solid: " + (", ".join(f"{a}->{b}" for a, b in dd.solid) or "none"))
    out.append("dashed: " + (", ".join(f"{a}-->{b}" for a, b in dd.dashed) or "none"))
    return "\n".join(out) + "\n"


def render_complex(cx: SingularBGGComplex, fmt: str = "text") -> str:
    sc = cx.character
    g = cx.graph
    if fmt == "json":
        return json_document(
            {
                "kind": "complex",
                "rank": sc.n,
                "k": sc.k,
                "parity": cx.parity,
                "lambda_plus_rho": str(sc.lambda_plus_rho),
                "nodes": [
                    {
                        "word": str(nd.word),
                        "weight": str(nd.weight),
                        "grading": cx.grading[nd.word],
                        "witness": str(cx.witness[nd.word]),
                    }
                    for nd in g.nodes
                ],
                "arrows": [
                    {
                        "src": str(a.src),
                        "dst": str(a.dst),
                        "kind": a.kind,
                        "order": a.order,
                        "label": None if a.label is None else str(a.label),
                    }
                    for a in g.arrows
                ],
            }
        )
    if fmt == "dot":
        nodes = [(str(nd.word), f"{nd.word}\\n{nd.weight}") for nd in g.nodes]
        edges = [(str(a.src), str(a.dst), _edge_attrs(a)) for a in g.arrows]
        return _dot("complex", nodes, edges)
    par = f", parity {cx.parity}" if cx.parity else ""
    out = [f"singular BGG complex: {_header(sc)}{par}: {len(g.nodes)} objects, {len(g.arrows)} arrows"]
    out.append(f"isomorphic to the regular rank {cx.rank} Hasse diagram via collapse")
    out += _table(
        [("grading", "word", "weight", "witness")]
        + [(str(cx.grading[nd.word]), str(nd.word), str(nd.weight), str(cx.witness[nd.word]) or "-") for nd in g.nodes]
    )
    out.append("arrows:")
    for a in g.arrows:
        style = "-->" if a.kind == NON_STANDARD else "->"
        ws = (g.node(a.src).weight, g.node(a.dst).weight)
        out.append(f"  {ws[0]} {style} {ws[1]}  ({a.kind}, order={a.order})")
    return "\n".join(out) + "\n"

