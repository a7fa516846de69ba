"""The diagonal-transposition classification, the sporadic relations, and the
assembly of the entropic partial order on the 60 classes.

Edge convention throughout: (x, y) means class x sits below class y in the
order, i.e. the f-information of x's arrangement never exceeds y's.  The
majoriser is the smaller element, and class 48 (the unique maximum) has every
other class below it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .cosets import class_of_grid, matrix_class, omega_action
from .digraph import (
    ENTROPIC_KINDS,
    MAJORISATION_KINDS,
    Digraph,
    Kind,
    transitive_closure,
    transitive_reduction,
)
from .majorise import single_transposition_majorisations

EXCEPTIONAL_MAJORISATIONS = ((34, 47), (46, 47))
SPORADIC_PROVEN = ((15, 10), (26, 10))
SPORADIC_CONJECTURAL = ((37, 11), (43, 11), (49, 11))
C4 = ((37, 11), (43, 11), (49, 11), (31, 11))


class DiagonalType(Enum):
    TYPE_A = "TypeA"
    TYPE_A_MAJORISATION = "TypeAMajorisation"
    TYPE_B = "TypeB"
    NO_RELATION = "NoRelation"


@dataclass(frozen=True)
class DiagonalContext:
    """Ranks arranged as (alpha x y / u beta v): alpha, beta in different rows
    and columns with alpha > beta and x > u as values (so smaller ranks)."""

    alpha: int
    beta: int
    x: int
    y: int
    u: int
    v: int

    def __post_init__(self):
        ranks = (self.alpha, self.x, self.y, self.u, self.beta, self.v)
        if sorted(ranks) != [1, 2, 3, 4, 5, 6]:
            raise ValueError(f"ranks must partition 1..6: {ranks}")
        if not (self.alpha < self.beta and self.x < self.u):
            raise ValueError("need alpha > beta and x > u as values")

    @property
    def grid(self) -> tuple[int, ...]:
        return (self.alpha, self.x, self.y, self.u, self.beta, self.v)

    @property
    def swapped_grid(self) -> tuple[int, ...]:
        return (self.beta, self.x, self.y, self.u, self.alpha, self.v)


def classify_diagonal(ctx: DiagonalContext) -> DiagonalType:
    """Order-theoretic type of the diagonal swap of alpha and beta.

    With values compared (rank 1 largest): type B iff y > x > u > v; type A iff
    v > y, refined to the majorisation case iff v > x > u > y; anything else
    admits no uniform relation.
    """
    x, y, u, v = ctx.x, ctx.y, ctx.u, ctx.v
    if y < x < u < v:  # y > x > u > v as values
        return DiagonalType.TYPE_B
    if v < y:  # v > y as values
        if v < x < u < y:
            return DiagonalType.TYPE_A_MAJORISATION
        return DiagonalType.TYPE_A
    return DiagonalType.NO_RELATION


def diagonal_contexts(alpha: int, beta: int):
    """The 12 admissible arrangements of the remaining four ranks (x > u)."""
    rest = [r for r in range(1, 7) if r not in (alpha, beta)]
    for x, y, u, v in itertools.permutations(rest):
        if x < u:  # x > u as values
            yield DiagonalContext(alpha=alpha, beta=beta, x=x, y=y, u=u, v=v)


@lru_cache(maxsize=1)
def diagonal_relations() -> Digraph:
    """The 105 diagonal-transposition relations: per letter pair one type-B,
    five pure type-A and one type-A majorisation edge."""
    edges = []
    for alpha, beta in itertools.combinations(range(1, 7), 2):
        for ctx in diagonal_contexts(alpha, beta):
            kind = classify_diagonal(ctx)
            c_sigma = class_of_grid(ctx.grid)
            c_sigma_tau = class_of_grid(ctx.swapped_grid)
            if kind is DiagonalType.TYPE_B:
                edges.append((c_sigma, c_sigma_tau, Kind.ENTROPIC_B))
            elif kind is DiagonalType.TYPE_A:
                edges.append((c_sigma_tau, c_sigma, Kind.ENTROPIC_A))
            elif kind is DiagonalType.TYPE_A_MAJORISATION:
                edges.append((c_sigma_tau, c_sigma, Kind.MAJ_DIAGONAL))
    return Digraph.from_edges(edges)


def diagonal_entropic_relations() -> Digraph:
    """The 90 diagonal relations not derivable from majorisation."""
    edges = {
        e: k for e, k in diagonal_relations().edges.items() if k is not Kind.MAJ_DIAGONAL
    }
    return Digraph(diagonal_relations().nodes, edges)


def typeb_edge(alpha: int, beta: int) -> tuple[int, int]:
    """The single type-B pair for the letter pair (alpha, beta)."""
    for ctx in diagonal_contexts(alpha, beta):
        if classify_diagonal(ctx) is DiagonalType.TYPE_B:
            return (class_of_grid(ctx.grid), class_of_grid(ctx.swapped_grid))
    raise AssertionError("unreachable: every letter pair has one type-B context")


def sporadic_relations(include_c4: bool) -> tuple[tuple[int, int, Kind], ...]:
    """The covering relations needing more than one transposition: two proven,
    and with ``include_c4`` also the three conjectural ones."""
    out = [(s, t, Kind.SPORADIC_PROVEN) for s, t in SPORADIC_PROVEN]
    if include_c4:
        out += [(s, t, Kind.SPORADIC_CONJECTURAL) for s, t in SPORADIC_CONJECTURAL]
    return tuple(out)


@dataclass(frozen=True)
class EntropicOrder:
    primitive: Digraph
    closure: Digraph
    covering: Digraph

    def covering_split(self) -> tuple[int, int]:
        """(majorisation, pure entropic) covering edge counts."""
        maj = sum(1 for k in self.covering.edges.values() if k in MAJORISATION_KINDS)
        ent = sum(1 for k in self.covering.edges.values() if k in ENTROPIC_KINDS)
        return maj, ent

    @property
    def density(self) -> float:
        return len(self.closure) / 1770.0


def build_E(include_c4: bool = True) -> EntropicOrder:
    """Assemble the order: 165 single-transposition majorisations, the two
    exceptional majorisations, the 90 diagonal entropic relations and the
    sporadics; closure and covering structure alongside."""
    edges = dict(single_transposition_majorisations().edges)
    for s, t in EXCEPTIONAL_MAJORISATIONS:
        edges[(s, t)] = Kind.MAJ_EXCEPTIONAL
    for (s, t), k in diagonal_entropic_relations().edges.items():
        edges[(s, t)] = k
    for s, t, k in sporadic_relations(include_c4):
        edges[(s, t)] = k
    primitive = Digraph.from_edges([(s, t, k) for (s, t), k in edges.items()])
    closure = transitive_closure(primitive)
    covering = transitive_reduction(closure)
    return EntropicOrder(primitive, closure, covering)


def conjectural_closure_edges() -> frozenset[tuple[int, int]]:
    """Closure edges present only when the conjectural C4 relations are assumed."""
    with_c4 = build_E(include_c4=True).closure.pairs
    without = build_E(include_c4=False).closure.pairs
    return frozenset(with_c4 - without)


def proven_covering_graph() -> Digraph:
    """The 183-edge graph: covering relations of the full (conjecture-inclusive)
    order with the three conjectural covering edges removed.

    Distinct from the Hasse diagram of the bare 826-relation order, which has
    185 edges: dropping the conjectural paths through class 11 promotes
    (37,12) and (49,12) back to covering status there.
    """
    cov = build_E(include_c4=True).covering
    edges = {
        e: k for e, k in cov.edges.items() if k is not Kind.SPORADIC_CONJECTURAL
    }
    return Digraph(cov.nodes, edges)


def exceptional_factorisations() -> dict:
    """Check that the two exceptional majorisations factor through class 53 and
    are not covering relations of the full order."""
    order = build_E(include_c4=True)
    prim = order.primitive.edges
    report = {
        "(34,53) primitive majorisation": prim.get((34, 53)) in MAJORISATION_KINDS,
        "(53,47) primitive entropic": prim.get((53, 47)) in ENTROPIC_KINDS,
        "(46,34) primitive entropic": prim.get((46, 34)) in ENTROPIC_KINDS,
        "(34,47) not covering": (34, 47) not in order.covering,
        "(46,47) not covering": (46, 47) not in order.covering,
        "(34,47) in closure": (34, 47) in order.closure,
        "(46,47) in closure": (46, 47) in order.closure,
    }
    report["ok"] = all(report.values())
    return report


@lru_cache(maxsize=1)
def square_analytic_closure() -> Digraph:
    """The analytic order for f(x) = -x^2: same majorisation relations, but the
    diagonal rule degenerates to type A iff v > y and type B iff y > v (no
    excluded orderings), closed transitively; 1184 relations."""
    edges = dict(single_transposition_majorisations().edges)
    for alpha, beta in itertools.combinations(range(1, 7), 2):
        for ctx in diagonal_contexts(alpha, beta):
            c_sigma = class_of_grid(ctx.grid)
            c_sigma_tau = class_of_grid(ctx.swapped_grid)
            if ctx.v < ctx.y:  # v > y as values: type A
                edges.setdefault((c_sigma_tau, c_sigma), Kind.ENTROPIC_A)
            else:  # y > v: type B
                edges.setdefault((c_sigma, c_sigma_tau), Kind.ENTROPIC_B)
    return transitive_closure(Digraph.from_edges([(s, t, k) for (s, t), k in edges.items()]))


def equivariant_under_omega(d: Digraph) -> bool:
    """Conjugation by omega maps the edge set onto itself, kinds preserved."""
    for (s, t), k in d.edges.items():
        image = (omega_action(s), omega_action(t))
        if d.edges.get(image) != k:
            return False
    return True
