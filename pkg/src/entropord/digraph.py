"""Directed-graph utilities for the order work: transitive closure and
reduction, DAG check, automorphism search, and DOT/JSON/CSV serialization.

Edges carry a kind tag.  Closure-created edges are tagged ``Kind.DERIVED``;
edges surviving a reduction keep their original tag when they existed before
the closure.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from enum import Enum

import numpy as np


class Kind(str, Enum):
    MAJ_HORIZONTAL = "MajHorizontal"
    MAJ_VERTICAL = "MajVertical"
    MAJ_DIAGONAL = "MajDiagonal"
    MAJ_EXCEPTIONAL = "MajExceptional"  # the two multi-transposition majorisations
    ENTROPIC_A = "EntropicA"
    ENTROPIC_B = "EntropicB"
    SPORADIC_PROVEN = "SporadicProven"
    SPORADIC_CONJECTURAL = "SporadicConjectural"
    DERIVED = "Derived"


MAJORISATION_KINDS = frozenset(
    {Kind.MAJ_HORIZONTAL, Kind.MAJ_VERTICAL, Kind.MAJ_DIAGONAL, Kind.MAJ_EXCEPTIONAL}
)
ENTROPIC_KINDS = frozenset(
    {Kind.ENTROPIC_A, Kind.ENTROPIC_B, Kind.SPORADIC_PROVEN, Kind.SPORADIC_CONJECTURAL}
)


class NotADag(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph over hashable nodes (ClassIds 1..60 by default)."""

    nodes: tuple
    edges: dict  # (src, dst) -> Kind

    def __post_init__(self):
        node_set = set(self.nodes)
        for s, d in self.edges:
            if s == d:
                raise ValueError(f"self-loop on {s}")
            if s not in node_set or d not in node_set:
                raise ValueError(f"edge ({s},{d}) outside node set")

    @classmethod
    def from_edges(cls, edges, nodes=None) -> "Digraph":
        """edges: iterable of (src, dst, kind) or (src, dst) [kind DERIVED]."""
        table = {}
        for e in edges:
            if len(e) == 3:
                s, d, k = e
            else:
                (s, d), k = e, Kind.DERIVED
            table[(s, d)] = Kind(k)
        if nodes is None:
            nodes = tuple(range(1, 61))
        return cls(tuple(nodes), table)

    @property
    def pairs(self) -> frozenset:
        return frozenset(self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, pair):
        return pair in self.edges

    def kind_counts(self) -> dict:
        out: dict[Kind, int] = {}
        for k in self.edges.values():
            out[k] = out.get(k, 0) + 1
        return out

    def adjacency(self) -> np.ndarray:
        idx = {v: i for i, v in enumerate(self.nodes)}
        n = len(self.nodes)
        a = np.zeros((n, n), dtype=bool)
        for s, d in self.edges:
            a[idx[s], idx[d]] = True
        return a


def _closure_matrix(a: np.ndarray) -> np.ndarray:
    """Strict reachability (paths of length >= 1) by repeated squaring."""
    c = a.copy()
    while True:
        nxt = c | (c @ c)
        if (nxt == c).all():
            return c
        c = nxt


def transitive_closure(d: Digraph) -> Digraph:
    c = _closure_matrix(d.adjacency())
    edges = {}
    for i, j in zip(*np.nonzero(c)):
        s, t = d.nodes[i], d.nodes[j]
        if s == t:
            raise NotADag(f"cycle through {s}")
        edges[(s, t)] = d.edges.get((s, t), Kind.DERIVED)
    return Digraph(d.nodes, edges)


def is_dag(d: Digraph) -> bool:
    c = _closure_matrix(d.adjacency())
    return not c.diagonal().any()


def transitive_reduction(d: Digraph) -> Digraph:
    """Minimal edge set with the same closure (unique for DAGs).

    Tags: an edge keeps the tag it has in ``d``; a covering edge only present
    implicitly would be DERIVED, but for a DAG every covering edge of the
    closure is an edge of ``d`` itself.
    """
    c = _closure_matrix(d.adjacency())
    if c.diagonal().any():
        raise NotADag("transitive reduction needs a DAG")
    keep = c & ~(c @ c)  # (u,v) kept iff no intermediate w with u->w->v
    edges = {}
    for i, j in zip(*np.nonzero(keep)):
        s, t = d.nodes[i], d.nodes[j]
        edges[(s, t)] = d.edges.get((s, t), Kind.DERIVED)
    return Digraph(d.nodes, edges)


# ---------------------------------------------------------------------------
# Automorphisms: all node bijections preserving the edge set (kinds ignored).
# Colour refinement on (out, in) neighbourhoods, then backtracking inside the
# colour classes.
# ---------------------------------------------------------------------------


def _refine_colours(nodes, out_nb, in_nb):
    colour = {v: (len(out_nb[v]), len(in_nb[v])) for v in nodes}
    while True:
        nxt = {
            v: (
                colour[v],
                tuple(sorted(colour[w] for w in out_nb[v])),
                tuple(sorted(colour[w] for w in in_nb[v])),
            )
            for v in nodes
        }
        # canonicalise to small ints so tuples stay bounded
        palette = {c: i for i, c in enumerate(sorted(set(nxt.values())))}
        nxt = {v: palette[c] for v, c in nxt.items()}
        if len(set(nxt.values())) == len(set(colour.values())):
            return nxt
        colour = nxt


def automorphism_group(d: Digraph) -> list[dict]:
    """All edge-set-preserving bijections of the nodes, as node->node dicts."""
    nodes = list(d.nodes)
    out_nb = {v: set() for v in nodes}
    in_nb = {v: set() for v in nodes}
    for s, t in d.edges:
        out_nb[s].add(t)
        in_nb[t].add(s)
    colour = _refine_colours(nodes, out_nb, in_nb)
    by_colour: dict[int, list] = {}
    for v in nodes:
        by_colour.setdefault(colour[v], []).append(v)
    order = sorted(nodes, key=lambda v: (len(by_colour[colour[v]]), colour[v], v))

    found: list[dict] = []
    mapping: dict = {}
    used: set = set()

    def consistent(v, w) -> bool:
        for u, x in mapping.items():
            if (v in out_nb[u]) != (w in out_nb[x]):
                return False
            if (v in in_nb[u]) != (w in in_nb[x]):
                return False
        return True

    def backtrack(i: int):
        if i == len(order):
            found.append(dict(mapping))
            return
        v = order[i]
        for w in by_colour[colour[v]]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            backtrack(i + 1)
            used.discard(w)
            del mapping[v]

    backtrack(0)
    return found


# ---------------------------------------------------------------------------
# Serialization.  Nodes are labelled "C<id>" in DOT output.
# ---------------------------------------------------------------------------


def _sorted_edges(d: Digraph):
    return sorted((s, t, d.edges[(s, t)].value) for s, t in d.edges)


def export(d: Digraph, format: str) -> str:
    if format == "csv":
        buf = io.StringIO()
        buf.write("src,dst,kind\n")
        for s, t, k in _sorted_edges(d):
            buf.write(f"{s},{t},{k}\n")
        return buf.getvalue()
    if format == "json":
        return json.dumps(
            {
                "nodes": list(d.nodes),
                "edges": [
                    {"src": s, "dst": t, "kind": k} for s, t, k in _sorted_edges(d)
                ],
            },
            indent=1,
        )
    if format == "dot":
        lines = ["digraph entropic {"]
        for v in d.nodes:
            lines.append(f'  C{v};')
        for s, t, k in _sorted_edges(d):
            lines.append(f'  C{s} -> C{t} [kind="{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")


def _parse_node(label: str):
    label = label.strip()
    if label.startswith("C") and label[1:].isdigit():
        return int(label[1:])
    return int(label)


def import_graph(text: str, format: str) -> Digraph:
    """Inverse of export, for round-trip checks (DOT import covers only the
    exporter's output shape)."""
    if format == "csv":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        assert lines[0] == "src,dst,kind"
        edges = []
        for ln in lines[1:]:
            s, t, k = ln.split(",")
            edges.append((int(s), int(t), Kind(k)))
        nodes = tuple(range(1, 61))
        seen = {v for e in edges for v in e[:2]}
        if not seen <= set(nodes):
            nodes = tuple(sorted(seen))
        return Digraph.from_edges(edges, nodes)
    if format == "json":
        obj = json.loads(text)
        return Digraph.from_edges(
            [(e["src"], e["dst"], Kind(e["kind"])) for e in obj["edges"]],
            tuple(obj["nodes"]),
        )
    if format == "dot":
        nodes, edges = [], []
        for ln in text.splitlines():
            ln = ln.strip().rstrip(";")
            if "->" in ln:
                left, rest = ln.split("->")
                right, attr = rest.split("[")
                kind = Kind(attr.split('"')[1])
                edges.append((_parse_node(left), _parse_node(right), kind))
            elif ln.startswith("C") and ln[1:].isdigit():
                nodes.append(int(ln[1:]))
        return Digraph.from_edges(edges, tuple(nodes))
    raise ValueError(f"unknown format {format!r}")
