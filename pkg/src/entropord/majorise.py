"""A-priori comparisons between letter-subset sums, the GR2/GR3 covering
posets, the class-level majorisation test, and the single-transposition
census.

A subset of letters stands for the sum of those probabilities.  With the
letters ordered a >= b >= ... >= f, one subset dominates another of the same
size exactly when, after cancelling common letters, the value-sorted
remainders dominate elementwise.  GR2 is the covering digraph on the 15 pair
sums (column sums), GR3 on the 20 triple sums (row sums).
"""

from __future__ import annotations

import itertools
from enum import Enum
from functools import lru_cache

import numpy as np

from .cosets import TRANSPOSITIONS, enumerate_classes, matrix_class
from .digraph import Digraph, Kind, transitive_closure, transitive_reduction
from .perm import LETTERS, arrangement_of


class Cmp(Enum):
    GREATER_EQ = "GreaterEq"
    LESS_EQ = "LessEq"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


class Marginal(Enum):
    ROW_ONLY = "RowOnly"
    COL_ONLY = "ColOnly"
    BOTH = "Both"
    NEITHER = "Neither"


PAIRS = tuple(itertools.combinations(range(1, 7), 2))  # 15, lexicographic
TRIPLES = tuple(itertools.combinations(range(1, 7), 3))  # 20, lexicographic
PAIR_INDEX = {p: i for i, p in enumerate(PAIRS)}
TRIPLE_INDEX = {t: i for i, t in enumerate(TRIPLES)}


def subset_label(subset) -> str:
    return "".join(LETTERS[r - 1] for r in sorted(subset))


def _dominates(s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    """sum(s) >= sum(t) for every admissible vector: after removing common
    letters the rank-sorted remainders dominate (smaller rank = larger value)."""
    common = set(s) & set(t)
    rs = sorted(x for x in s if x not in common)
    rt = sorted(x for x in t if x not in common)
    return all(a <= b for a, b in zip(rs, rt))


def apriori_compare(s, t) -> Cmp:
    s, t = tuple(sorted(s)), tuple(sorted(t))
    if len(s) != len(t):
        raise ValueError(f"size mismatch: {s} vs {t}")
    if s == t:
        return Cmp.EQUAL
    ge = _dominates(s, t)
    le = _dominates(t, s)
    if ge:
        return Cmp.GREATER_EQ
    if le:
        return Cmp.LESS_EQ
    return Cmp.INCOMPARABLE


def _dominance_digraph(subsets) -> Digraph:
    edges = [
        (s, t, Kind.DERIVED)
        for s in subsets
        for t in subsets
        if s != t and apriori_compare(s, t) is Cmp.GREATER_EQ
    ]
    return Digraph.from_edges(edges, tuple(subsets))


@lru_cache(maxsize=1)
def gr2_covering() -> Digraph:
    """Covering relations between the 15 column sums (equals the fixture M2)."""
    return transitive_reduction(_dominance_digraph(PAIRS))


@lru_cache(maxsize=1)
def gr3_covering() -> Digraph:
    """Covering relations between the 20 row sums (equals the fixture M3)."""
    return transitive_reduction(_dominance_digraph(TRIPLES))


@lru_cache(maxsize=1)
def _reach() -> tuple[np.ndarray, np.ndarray]:
    """Reflexive-transitive reachability on GR2 and GR3, from the covering
    graphs (sum of matrix powers including the identity)."""

    def closure(cover: Digraph, index) -> np.ndarray:
        n = len(cover.nodes)
        r = np.eye(n, dtype=bool)
        for s, t in cover.edges:
            r[index[s], index[t]] = True
        while True:
            nxt = r | (r @ r)
            if (nxt == r).all():
                return r
            r = nxt

    return closure(gr2_covering(), PAIR_INDEX), closure(gr3_covering(), TRIPLE_INDEX)


@lru_cache(maxsize=1)
def _class_marginals() -> tuple[tuple, tuple]:
    """(row triple indices, column pair indices) per class, 0-indexed by id-1."""
    rows, cols = [], []
    for cls in enumerate_classes():
        g = cls.canonical_grid
        rows.append(
            (TRIPLE_INDEX[tuple(sorted(g[:3]))], TRIPLE_INDEX[tuple(sorted(g[3:]))])
        )
        cols.append(
            tuple(PAIR_INDEX[tuple(sorted((g[j], g[j + 3])))] for j in range(3))
        )
    return tuple(rows), tuple(cols)


def marginal_subsets(cid: int):
    """(row triples, column pairs) of a class, as sorted rank tuples."""
    g = matrix_class(cid).canonical_grid
    rows = (tuple(sorted(g[:3])), tuple(sorted(g[3:])))
    cols = tuple(tuple(sorted((g[j], g[j + 3]))) for j in range(3))
    return rows, cols


def _between(coords_x, coords_y, reach: np.ndarray) -> bool:
    # every coordinate of y lies on a directed path joining two coordinates of x
    for j in coords_y:
        if not (
            any(reach[k, j] for k in coords_x) and any(reach[j, l] for l in coords_x)
        ):
            return False
    return True


def row_majorises(x: int, y: int) -> bool:
    rows, _ = _class_marginals()
    return _between(rows[x - 1], rows[y - 1], _reach()[1])


def col_majorises(x: int, y: int) -> bool:
    _, cols = _class_marginals()
    return _between(cols[x - 1], cols[y - 1], _reach()[0])


def class_majorises(x: int, y: int) -> bool:
    """Matrix-class majorisation: the marginal test on GR3 rows and GR2 cols."""
    return row_majorises(x, y) and col_majorises(x, y)


def apriori_row_col_status(x: int, y: int) -> Marginal:
    """Which marginal majorisations hold a priori in the direction x over y."""
    r, c = row_majorises(x, y), col_majorises(x, y)
    if r and c:
        return Marginal.BOTH
    if r:
        return Marginal.ROW_ONLY
    if c:
        return Marginal.COL_ONLY
    return Marginal.NEITHER


def no_marginal_majorisation_pairs() -> frozenset[frozenset]:
    """Unordered class pairs with no marginal majorisation in either direction
    (106 pairs; a superset of the 30-pair reference list)."""
    out = set()
    for x in range(1, 61):
        for y in range(x + 1, 61):
            if (
                apriori_row_col_status(x, y) is Marginal.NEITHER
                and apriori_row_col_status(y, x) is Marginal.NEITHER
            ):
                out.add(frozenset((x, y)))
    return frozenset(out)


def _has_incomparable_cross(subs_x, subs_y) -> bool:
    return any(
        apriori_compare(a, b) is Cmp.INCOMPARABLE for a in subs_x for b in subs_y
    )


def no_relation_pairs() -> frozenset[frozenset]:
    """The 30 structurally unrelated class pairs: no marginal majorisation in
    either direction, and moreover some pair of row sums and some pair of
    column sums across the two classes cannot be ordered a priori at all."""
    out = set()
    for pair in no_marginal_majorisation_pairs():
        x, y = sorted(pair)
        rx, cx = marginal_subsets(x)
        ry, cy = marginal_subsets(y)
        if _has_incomparable_cross(rx, ry) and _has_incomparable_cross(cx, cy):
            out.add(pair)
    return frozenset(out)


@lru_cache(maxsize=1)
def majorisation_digraph() -> Digraph:
    """All strict ordered class pairs where x majorises y (423 edges)."""
    edges = [
        (x, y, Kind.DERIVED)
        for x in range(1, 61)
        for y in range(1, 61)
        if x != y and class_majorises(x, y)
    ]
    return Digraph.from_edges(edges)


# ---------------------------------------------------------------------------
# Single transpositions.
# ---------------------------------------------------------------------------


def _transposition_geometry(cid: int, tau) -> Kind:
    """Geometry of tau acting on (any representative of) class ``cid``: the two
    swapped letters sit at positions rep(i), rep(j)."""
    rep = matrix_class(cid).canonical_rep
    (i, j) = next(c for c in tau.cycles() if len(c) == 2)
    pi, pj = rep(i), rep(j)
    if (pi - 1) // 3 == (pj - 1) // 3:
        return Kind.MAJ_HORIZONTAL
    if (pi - 1) % 3 == (pj - 1) % 3:
        return Kind.MAJ_VERTICAL
    return Kind.MAJ_DIAGONAL


@lru_cache(maxsize=1)
def _transposition_links() -> dict[frozenset, Kind]:
    """Unordered class pairs linked by a single transposition, with the
    geometry of the witnessing transposition (well defined per pair)."""
    from .cosets import class_of

    links: dict[frozenset, Kind] = {}
    for cls in enumerate_classes():
        for tau in TRANSPOSITIONS:
            other = class_of(cls.canonical_rep * tau)
            assert other != cls.id
            pair = frozenset((cls.id, other))
            geo = _transposition_geometry(cls.id, tau)
            prev = links.setdefault(pair, geo)
            assert prev == geo, f"mixed geometry on {set(pair)}"
    return links


def transposition_pairs() -> frozenset[frozenset]:
    """The 360 unordered class pairs related by a single transposition."""
    return frozenset(_transposition_links())


def transposition_adjacency() -> np.ndarray:
    a = np.zeros((60, 60), dtype=np.int64)
    for pair in transposition_pairs():
        x, y = sorted(pair)
        a[x - 1, y - 1] = a[y - 1, x - 1] = 1
    return a


@lru_cache(maxsize=1)
def single_transposition_majorisations() -> Digraph:
    """The 165 majorisation relations realised by one transposition, tagged by
    the geometry of the witnessing transposition."""
    edges = []
    for pair, geo in _transposition_links().items():
        x, y = sorted(pair)
        if class_majorises(x, y):
            edges.append((x, y, geo))
        elif class_majorises(y, x):
            edges.append((y, x, geo))
    return Digraph.from_edges(edges)
