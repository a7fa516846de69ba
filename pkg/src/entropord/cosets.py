"""The subgroup K of row/column swaps, the 60 right cosets K\\S6, and the
involution induced by the longest element omega.

Left multiplication by K permutes grid positions (row and column swaps), so
right cosets Kg collect the 12 arrangements with equal marginal structure.
The canonical form of a class puts letter a top-left with the second top-row
entry larger (in value) than the third; classes are numbered 1..60 in
lexicographic order of the canonical grids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .perm import (
    Perm,
    all_perms,
    apply,
    arrangement_of,
    grid_string,
    identity,
    parse_cycles,
    perm_of_arrangement,
    transposition,
)

K_GENERATORS = (
    parse_cycles("(1,2)(4,5)"),
    parse_cycles("(1,3)(4,6)"),
    parse_cycles("(1,4)(2,5)(3,6)"),
)

OMEGA = parse_cycles("(1,6)(2,5)(3,4)")

# the six parabolic subgroups of S6 isomorphic to the dihedral group of order 12
PARABOLIC_GENERATORS = tuple(
    tuple(parse_cycles(t) for t in triple)
    for triple in (
        ("(1,2)", "(2,3)", "(4,5)"),
        ("(1,2)", "(2,3)", "(5,6)"),
        ("(1,2)", "(3,4)", "(4,5)"),
        ("(1,2)", "(4,5)", "(5,6)"),
        ("(2,3)", "(3,4)", "(5,6)"),
        ("(2,3)", "(4,5)", "(5,6)"),
    )
)

TRANSPOSITIONS = tuple(
    transposition(i, j) for i in range(1, 7) for j in range(i + 1, 7)
)


def generate_subgroup(generators) -> frozenset[Perm]:
    """Closure of the generators under multiplication."""
    gens = list(generators) + [g.inv() for g in generators]
    elems = {identity()}
    frontier = [identity()]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(elems)


K = generate_subgroup(K_GENERATORS)
assert len(K) == 12


@dataclass(frozen=True)
class MatrixClass:
    id: int
    canonical_rep: Perm
    canonical_grid: tuple[int, ...]

    def __str__(self):
        return f"{self.id}: ({grid_string(self.canonical_grid)})"


def k_images(grid: tuple[int, ...]) -> list[tuple[int, ...]]:
    """The 12 grids in the class of ``grid`` (positions permuted by K)."""
    return [apply(k, grid) for k in K]


def canonical_grid(grid: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form: letter a at top-left, second top entry bigger in value
    (smaller in rank) than the third."""
    best = [g for g in k_images(grid) if g[0] == 1 and g[1] < g[2]]
    assert len(best) == 1
    return best[0]


@lru_cache(maxsize=1)
def _class_table() -> tuple[tuple[MatrixClass, ...], dict[tuple[int, ...], int]]:
    grids = sorted({canonical_grid(arrangement_of(p)) for p in all_perms()})
    assert len(grids) == 60
    classes = tuple(
        MatrixClass(i, perm_of_arrangement(g), g) for i, g in enumerate(grids, 1)
    )
    lookup: dict[tuple[int, ...], int] = {}
    for cls in classes:
        for img in k_images(cls.canonical_grid):
            lookup[img] = cls.id
    assert len(lookup) == 720
    return classes, lookup


def enumerate_classes() -> tuple[MatrixClass, ...]:
    """The 60 classes in lexicographic (appendix) order."""
    return _class_table()[0]


def matrix_class(cid: int) -> MatrixClass:
    return _class_table()[0][cid - 1]


def class_of_grid(grid: tuple[int, ...]) -> int:
    return _class_table()[1][grid]


def class_of(p: Perm) -> int:
    """The id of the right coset Kp."""
    return class_of_grid(arrangement_of(p))


def class_members(cid: int) -> frozenset[Perm]:
    rep = matrix_class(cid).canonical_rep
    return frozenset(k * rep for k in K)


def omega_action(cid: int) -> int:
    """Class of rep*omega: replace each letter by its bar-image (a<->f, b<->e,
    c<->d) and renormalise."""
    return class_of(matrix_class(cid).canonical_rep * OMEGA)


def omega_orbits() -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """(swapped pairs, fixed classes) of the omega involution."""
    pairs, fixed = [], []
    for x in range(1, 61):
        y = omega_action(x)
        if y == x:
            fixed.append(x)
        elif x < y:
            pairs.append((x, y))
    return tuple(pairs), tuple(fixed)


def parabolic_subgroups() -> tuple[tuple[Perm, ...], ...]:
    return PARABOLIC_GENERATORS


# ---------------------------------------------------------------------------
# Outer automorphisms mapping K onto a parabolic subgroup.
#
# S6 is the Coxeter group on s1..s5 with the braid and commutation relations,
# so any involutions t1..t5 satisfying those relations and generating S6
# define an automorphism.  An automorphism with zeta(K) = J must be outer
# (K and the parabolics are not conjugate), hence sends transpositions to
# triple transpositions; the search runs over that class.
# ---------------------------------------------------------------------------

COXETER = tuple(transposition(i, i + 1) for i in range(1, 6))

TRIPLE_TRANSPOSITIONS = tuple(
    g for g in all_perms() if g.order() == 2 and len(g.cycles()) == 3
)
assert len(TRIPLE_TRANSPOSITIONS) == 15


@dataclass(frozen=True)
class AutomorphismWitness:
    """An automorphism of S6 given by generator images, with its certificate."""

    coxeter_images: tuple[Perm, ...]  # images of (1,2),(2,3),...,(5,6)
    mapping: dict  # full element map Perm -> Perm

    @property
    def image_of_s(self) -> Perm:
        return self.coxeter_images[0]

    @property
    def image_of_cycle(self) -> Perm:
        # (1,2,3,4,5,6) = s1 s2 s3 s4 s5 composing right to left
        t = self.coxeter_images
        return t[0] * t[1] * t[2] * t[3] * t[4]

    def __call__(self, g: Perm) -> Perm:
        return self.mapping[g]

    def certificate(self, J: frozenset[Perm]) -> dict[str, bool]:
        t = self.coxeter_images
        braid = all((t[i] * t[i + 1]).order() == 3 for i in range(4))
        commute = all(
            (t[i] * t[j]).order() == 2
            for i in range(5)
            for j in range(i + 2, 5)
        )
        involutions = all(ti.order() == 2 for ti in t)
        bijective = len(set(self.mapping.values())) == 720
        homomorphism = all(
            self.mapping[g * s] == self.mapping[g] * ts
            for g in self.mapping
            for s, ts in zip(COXETER, t)
        )
        k_onto_j = {self.mapping[k] for k in K} == set(J)
        return {
            "involutions": involutions,
            "braid_relations": braid,
            "commutation_relations": commute,
            "bijective": bijective,
            "homomorphism": homomorphism,
            "maps_K_onto_J": k_onto_j,
        }


@lru_cache(maxsize=1)
def _coxeter_words() -> list[tuple[Perm, tuple[int, ...]]]:
    """Every element of S6 as one reduced-ish word in the Coxeter generators."""
    words = {identity(): ()}
    frontier = [identity()]
    while frontier:
        nxt = []
        for g in frontier:
            for i, s in enumerate(COXETER):
                h = g * s
                if h not in words:
                    words[h] = words[g] + (i,)
                    nxt.append(h)
        frontier = nxt
    assert len(words) == 720
    return list(words.items())


def _extend(images: tuple[Perm, ...]) -> dict:
    table = {}
    for g, word in _coxeter_words():
        acc = identity()
        for i in word:
            acc = acc * images[i]
        table[g] = acc
    return table


def find_automorphism_K_to_J(J_generators) -> AutomorphismWitness:
    """Backtracking search for an automorphism of S6 carrying K onto the
    subgroup generated by ``J_generators``.

    Raises LookupError if the search space is exhausted without a witness.
    """
    J = generate_subgroup(J_generators)
    candidates = TRIPLE_TRANSPOSITIONS

    def ok(chosen: list[Perm], t: Perm) -> bool:
        i = len(chosen)
        for j, prev in enumerate(chosen):
            want = 3 if j == i - 1 else 2
            if (prev * t).order() != want:
                return False
        return True

    def search(chosen: list[Perm]):
        if len(chosen) == 5:
            if len(generate_subgroup(chosen)) != 720:
                return None
            witness = AutomorphismWitness(tuple(chosen), _extend(tuple(chosen)))
            if {witness.mapping[k] for k in K} == set(J):
                return witness
            return None
        for t in candidates:
            if ok(chosen, t):
                found = search(chosen + [t])
                if found is not None:
                    return found
        return None

    witness = search([])
    if witness is None:
        raise LookupError("no automorphism of S6 maps K onto the given subgroup")
    return witness
