"""Integer group-ring arithmetic over S6 and the purely algebraic generation
of the 255 single-transposition relations.

For a transposition tau = (alpha, beta) with alpha > beta (as symbols) and the
remaining symbols labelled r > s > t > u, the context carries

    psi = (r,s),  chi = (s,t),  gamma = (alpha,t,u)(beta,r,s),
    mu = (alpha,beta)(r,t)(s,u),

and a coset representative sigma whose arrangement realises the grid
(alpha r s / beta u t).  The 17 terms of

    eta_tau = (eta_horiz + eta_cyc)(tau - 1)

each encode one relation  K z |> K z tau.  The printed formula is exact when
tau swaps two top-row or two bottom-row symbols of the fiducial; from those
starting points the whole web is generated inductively by adjacent
conjugation steps, with the horizontal block picking up the path product as a
left prefix (the cyc block absorbs it into sigma).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cosets import K, class_of, class_of_grid
from .digraph import Digraph, Kind
from .perm import Perm, arrangement_of, identity, transposition
from .relations import DiagonalContext, DiagonalType, classify_diagonal


class GroupRingElement:
    """Finite formal integer combination of S6 elements; zero coefficients are
    never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for g, c in (terms or {}).items():
            if c:
                clean[g] = c
        self.terms = clean

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({identity(): 1})

    @classmethod
    def of(cls, g: Perm, coeff: int = 1) -> "GroupRingElement":
        return cls({g: coeff})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({g: -c for g, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        out: dict[Perm, int] = {}
        for g, cg in self.terms.items():
            for h, ch in other.terms.items():
                gh = g * h
                out[gh] = out.get(gh, 0) + cg * ch
        return GroupRingElement(out)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [
            f"{c:+d}*{g}" for g, c in sorted(self.terms.items(), key=lambda t: t[0])
        ]
        return " ".join(parts)


def ring_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def ring_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


# (alpha, beta) with alpha > beta, all 15 transpositions
ALL_TAUS = tuple((b, a) for a, b in itertools.combinations(range(1, 7), 2))

# the anchor transposition where the printed formula needs no prefix
ANCHOR = (2, 1)


def _three_cycle(a: int, b: int, c: int) -> Perm:
    out = list(range(1, 7))
    out[a - 1], out[b - 1], out[c - 1] = b, c, a
    return Perm(out)


def _rest_of(alpha: int, beta: int) -> tuple[int, int, int, int]:
    return tuple(
        sorted((x for x in range(1, 7) if x not in (alpha, beta)), reverse=True)
    )


def _eta_grid(alpha: int, beta: int) -> tuple[int, ...]:
    r, s, t, u = _rest_of(alpha, beta)
    return (alpha, r, s, beta, u, t)


def perm_of_grid(grid: tuple[int, ...]) -> Perm:
    out = [0] * 6
    for pos, rank in enumerate(grid, start=1):
        out[rank - 1] = pos
    return Perm(out)


@dataclass(frozen=True)
class EtaContext:
    """The moving frame for one transposition.

    ``prefix`` left-multiplies the horizontal block: it is the product of the
    conjugation steps taken from a fiducial-horizontal starting transposition
    (the identity at such a start).
    """

    alpha: int
    beta: int
    psi: Perm
    chi: Perm
    gamma: Perm
    mu: Perm
    sigma: Perm
    prefix: Perm

    @property
    def tau(self) -> Perm:
        return transposition(self.alpha, self.beta)

    @property
    def rest(self) -> tuple[int, int, int, int]:
        return _rest_of(self.alpha, self.beta)

    def check(self) -> None:
        r, s, t, u = self.rest
        assert self.alpha > self.beta
        assert self.psi == transposition(r, s), "psi must be (r,s)"
        assert self.chi == transposition(s, t), "chi must be (s,t)"
        gamma = _three_cycle(self.alpha, t, u) * _three_cycle(self.beta, r, s)
        assert self.gamma == gamma, "gamma must be (alpha,t,u)(beta,r,s)"
        mu = (
            transposition(self.alpha, self.beta)
            * transposition(r, t)
            * transposition(s, u)
        )
        assert self.mu == mu, "mu must be (alpha,beta)(r,t)(s,u)"
        assert self.gamma.conj(self.mu) == self.gamma, "mu must fix gamma"
        assert self.psi.conj(self.mu) == transposition(t, u)
        want = class_of_grid(_eta_grid(self.alpha, self.beta))
        assert class_of(self.sigma) == want, "sigma outside its arrangement class"


def build_context(alpha: int, beta: int) -> EtaContext:
    """Direct frame at the anchor transposition (1,2); every other frame is
    reached from here by navigation, see ``context_of``."""
    if alpha < beta:
        alpha, beta = beta, alpha
    if (alpha, beta) != ANCHOR:
        raise ValueError(
            f"the direct construction is anchored at {ANCHOR}; use context_of"
        )
    r, s, t, u = _rest_of(alpha, beta)
    base = perm_of_grid(_eta_grid(alpha, beta))
    ctx = EtaContext(
        alpha=alpha,
        beta=beta,
        psi=transposition(r, s),
        chi=transposition(s, t),
        gamma=_three_cycle(alpha, t, u) * _three_cycle(beta, r, s),
        mu=transposition(alpha, beta) * transposition(r, t) * transposition(s, u),
        sigma=min(k * base for k in K),
        prefix=identity(),
    )
    ctx.check()
    return ctx


def step_context(ctx: EtaContext, kappa: Perm) -> EtaContext:
    """Move the frame to the adjacent transposition tau^kappa: conjugate every
    component, right-multiply sigma by kappa and extend the prefix."""
    a, b = sorted((kappa(ctx.alpha), kappa(ctx.beta)), reverse=True)
    new = EtaContext(
        alpha=a,
        beta=b,
        psi=ctx.psi.conj(kappa),
        chi=ctx.chi.conj(kappa),
        gamma=ctx.gamma.conj(kappa),
        mu=ctx.mu.conj(kappa),
        sigma=ctx.sigma * kappa,
        prefix=ctx.prefix * kappa,
    )
    new.check()
    return new


def adjacent_steps(alpha: int, beta: int):
    """Admissible kappa moves from tau = (alpha, beta): adjacent transpositions
    sharing a symbol with tau and keeping the pair distinct."""
    for x in (alpha, beta):
        for y in (x - 1, x + 1):
            if 1 <= y <= 6 and y not in (alpha, beta):
                yield transposition(x, y)


def _navigate(start_ctx: EtaContext) -> dict[tuple[int, int], EtaContext]:
    atlas = {(start_ctx.alpha, start_ctx.beta): start_ctx}
    frontier = [start_ctx]
    while frontier:
        nxt = []
        for ctx in frontier:
            for kappa in adjacent_steps(ctx.alpha, ctx.beta):
                moved = step_context(ctx, kappa)
                key = (moved.alpha, moved.beta)
                if key not in atlas:
                    atlas[key] = moved
                    nxt.append(moved)
        frontier = nxt
    if len(atlas) != 15:
        raise RuntimeError(f"navigation reached only {len(atlas)} transpositions")
    return atlas


@lru_cache(maxsize=1)
def _base_atlas() -> dict[tuple[int, int], EtaContext]:
    return _navigate(build_context(2, 1))


def _as_pair(tau) -> tuple[int, int]:
    if isinstance(tau, Perm):
        (i, j) = next(c for c in tau.cycles() if len(c) == 2)
        return (max(i, j), min(i, j))
    a, b = tau
    return (max(a, b), min(a, b))


def context_of(tau) -> EtaContext:
    """The frame for any transposition, transported from the anchor."""
    return _base_atlas()[_as_pair(tau)]


def eta_components(
    tau_or_ctx,
) -> tuple[GroupRingElement, GroupRingElement, GroupRingElement]:
    """(eta_horiz, eta_cyc, eta): six, eleven and seventeen terms."""
    ctx = tau_or_ctx if isinstance(tau_or_ctx, EtaContext) else context_of(tau_or_ctx)
    one = GroupRingElement.one()
    psi = GroupRingElement.of(ctx.psi)
    psi_mu = GroupRingElement.of(ctx.psi.conj(ctx.mu))
    chi = GroupRingElement.of(ctx.chi)
    gamma = GroupRingElement.of(ctx.gamma)
    sigma = GroupRingElement.of(ctx.sigma)
    pre = GroupRingElement.of(ctx.prefix)
    horiz = pre * (
        (one + psi) * (one + psi_mu) * (one + chi) - (one + psi * psi_mu) * chi
    )
    cyc = sigma * (one + gamma + gamma * gamma) * (one + psi) * (
        one + chi
    ) - sigma * gamma * gamma * psi * chi
    tau = GroupRingElement.of(ctx.tau)
    eta = (horiz + cyc) * (tau - one)
    return horiz, cyc, eta


def _classify_edge(z: Perm, tau: Perm) -> tuple[int, int, Kind]:
    """The relation (class z, class z*tau) of one eta term, tagged by the
    geometry of tau inside z's arrangement."""
    c1, c2 = class_of(z), class_of(z * tau)
    (i, j) = next(c for c in tau.cycles() if len(c) == 2)
    p1, p2 = z(i), z(j)  # grid positions of the swapped letters (i < j)
    r1, col1 = divmod(p1 - 1, 3)
    r2, col2 = divmod(p2 - 1, 3)
    if r1 == r2:
        return c1, c2, Kind.MAJ_HORIZONTAL
    if col1 == col2:
        return c1, c2, Kind.MAJ_VERTICAL
    # diagonal: read the four remaining roles off z's grid
    grid = arrangement_of(z)
    alpha, beta = i, j  # ranks; alpha carries the larger value
    pos = lambda row, col: 3 * row + col + 1
    x = grid[pos(r1, col2) - 1]
    y = grid[pos(r1, 3 - col1 - col2) - 1]
    u = grid[pos(r2, col1) - 1]
    v = grid[pos(r2, 3 - col1 - col2) - 1]
    if x < u:  # z's arrangement is already in the (alpha x y / u beta v) frame
        sigma_side, tau_side = c1, c2
        ctx = DiagonalContext(alpha=alpha, beta=beta, x=x, y=y, u=u, v=v)
    else:  # the swapped arrangement is; z plays the tau side
        sigma_side, tau_side = c2, c1
        ctx = DiagonalContext(alpha=alpha, beta=beta, x=u, y=v, u=x, v=y)
    kind = classify_diagonal(ctx)
    if kind is DiagonalType.TYPE_B:
        derived, tag = (sigma_side, tau_side), Kind.ENTROPIC_B
    elif kind is DiagonalType.TYPE_A:
        derived, tag = (tau_side, sigma_side), Kind.ENTROPIC_A
    elif kind is DiagonalType.TYPE_A_MAJORISATION:
        derived, tag = (tau_side, sigma_side), Kind.MAJ_DIAGONAL
    else:
        raise AssertionError(f"eta term yields no relation: {z} with tau {tau}")
    # the algebraic construction fixes the direction as (class z, class z tau);
    # the order-theoretic rule must agree
    assert derived == (c1, c2), f"direction clash on {(c1, c2)} for {z}"
    return c1, c2, tag


def relations_from_context(ctx: EtaContext) -> dict[tuple[int, int], Kind]:
    horiz, cyc, _ = eta_components(ctx)
    support = horiz + cyc
    assert len(support) == 17 and all(c == 1 for c in support.terms.values())
    out: dict[tuple[int, int], Kind] = {}
    for z in support.terms:
        s, t, k = _classify_edge(z, ctx.tau)
        out[(s, t)] = k
    assert len(out) == 17, "duplicate class pair within one transposition"
    return out


def relations_from_eta(tau) -> frozenset[tuple[int, int]]:
    """The 17 ordered class pairs encoded by eta_tau."""
    return frozenset(relations_from_context(context_of(tau)))


@lru_cache(maxsize=1)
def all_eta_relations() -> Digraph:
    """Union of the 15 eta webs: 255 kind-tagged ordered class pairs."""
    edges: dict[tuple[int, int], Kind] = {}
    for pair, ctx in _base_atlas().items():
        for edge, kind in relations_from_context(ctx).items():
            prev = edges.setdefault(edge, kind)
            assert prev == kind
    assert len(edges) == 255
    return Digraph.from_edges([(s, t, k) for (s, t), k in edges.items()])


def inductive_generation(start) -> Digraph:
    """Generate all 255 relations by navigating outward from ``start``; the
    result is the same digraph for every choice of starting transposition."""
    atlas = _navigate(context_of(start))
    edges: dict[tuple[int, int], Kind] = {}
    for ctx in atlas.values():
        edges.update(relations_from_context(ctx))
    if len(edges) != 255:
        raise RuntimeError(f"navigation produced {len(edges)} relations, not 255")
    return Digraph.from_edges([(s, t, k) for (s, t), k in edges.items()])


def eta_z_terms(tau) -> frozenset[Perm]:
    """The 17 elements z in the z(tau - 1) decomposition of eta_tau."""
    ctx = context_of(tau)
    _, _, eta = eta_components(ctx)
    neg = frozenset(g for g, c in eta.terms.items() if c == -1)
    pos = frozenset(g for g, c in eta.terms.items() if c == 1)
    assert len(neg) == len(pos) == 17 and len(eta) == 34
    assert frozenset(z * ctx.tau for z in neg) == pos
    return neg


def eta_term_table(tau) -> str:
    """Text dump of eta_tau: one line per term, \"coeff cycle-notation\"."""
    _, _, eta = eta_components(tau)
    lines = [
        f"{c:+d} {g}" for g, c in sorted(eta.terms.items(), key=lambda item: item[0])
    ]
    return "\n".join(lines) + "\n"
