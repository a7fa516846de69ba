"""Exact arithmetic in the symmetric group on {1..6}.

Permutations are stored in one-line form: ``images[i-1]`` is the image of ``i``.
Cycle notation composes right to left, so ``(1,2)(2,3) = (1,2,3)``.
"""

from __future__ import annotations

import itertools
import re

N = 6
POINTS = tuple(range(1, N + 1))
LETTERS = "abcdef"

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Perm:
    """A permutation of {1..6}, immutable and hashable."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(POINTS):
            raise ValueError(f"not a permutation of 1..{N}: {images!r}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        # (p * q)(i) = p(q(i)): apply q first, then p
        qi = other.images
        pi = self.images
        return Perm(tuple(pi[qi[i] - 1] for i in range(N)))

    def inv(self) -> "Perm":
        out = [0] * N
        for i, j in enumerate(self.images, start=1):
            out[j - 1] = i
        return Perm(out)

    def conj(self, by: "Perm") -> "Perm":
        """Return by * self * by^-1."""
        return by * self * by.inv()

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inv() ** (-k)
        acc = identity()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def order(self) -> int:
        k, p = 1, self
        while p.images != POINTS:
            p = p * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its smallest point,
        sorted by that point."""
        seen = [False] * N
        out = []
        for start in POINTS:
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm{self.images}"

    def __str__(self):
        return format_cycles(self)


def identity() -> Perm:
    return Perm(POINTS)


def transposition(i: int, j: int) -> Perm:
    out = list(POINTS)
    out[i - 1], out[j - 1] = j, i
    return Perm(out)


def from_cycle(points: tuple[int, ...]) -> Perm:
    out = list(POINTS)
    for a, b in zip(points, points[1:] + points[:1]):
        out[a - 1] = b
    return Perm(out)


def compose(p: Perm, q: Perm) -> Perm:
    """First apply q, then p."""
    return p * q


def parse_cycles(text: str) -> Perm:
    """Parse cycle notation such as "(3654)", "(3,6,5,4)" or "(25)(36)".

    Listed cycles need not be disjoint; they compose right to left.
    "()" is the identity.
    """
    text = text.strip()
    if not re.fullmatch(r"(\([^()]*\)\s*)+", text):
        raise ValueError(f"malformed cycle notation: {text!r}")
    result = identity()
    for body in reversed(_CYCLE_RE.findall(text)):  # rightmost cycle acts first
        body = body.strip()
        if not body:
            continue
        if "," in body:
            parts = [s.strip() for s in body.split(",")]
        else:
            parts = list(re.sub(r"\s", "", body))
        points = []
        for s in parts:
            if not s.isdigit():
                raise ValueError(f"bad symbol {s!r} in cycle {body!r}")
            k = int(s)
            if not 1 <= k <= N:
                raise ValueError(f"symbol {k} outside 1..{N}")
            points.append(k)
        if len(set(points)) != len(points):
            raise ValueError(f"repeated symbol in cycle ({body})")
        result = result * from_cycle(tuple(points))
    return result


def format_cycles(p: Perm) -> str:
    """Canonical disjoint-cycle text with commas, e.g. "(3,6,5,4)"; identity is "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# 2x3 letter arrangements.
#
# A grid is a tuple of six ranks read row-major: positions 1..3 are the top
# row, 4..6 the bottom row, and rank 1 = letter a = the largest probability.
# The arrangement of a group element g puts letter k at position g(k); acting
# with g on the fiducial (a b c / d e f) therefore moves the letter at
# position k to position g(k).
# ---------------------------------------------------------------------------

FIDUCIAL = POINTS  # (1, 2, 3, 4, 5, 6) == (a b c / d e f)


def apply(p: Perm, base: tuple[int, ...]) -> tuple[int, ...]:
    """Move the entry at position k of ``base`` to position p(k)."""
    out = [0] * N
    for k in POINTS:
        out[p(k) - 1] = base[k - 1]
    return tuple(out)


def arrangement_of(p: Perm) -> tuple[int, ...]:
    """Grid of p: letter k sits at position p(k)."""
    return apply(p, FIDUCIAL)


def perm_of_arrangement(grid: tuple[int, ...]) -> Perm:
    """The unique g with arrangement_of(g) == grid."""
    out = [0] * N
    for pos, rank in enumerate(grid, start=1):
        out[rank - 1] = pos
    return Perm(out)


def grid_rows(grid: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return grid[:3], grid[3:]


def grid_string(grid: tuple[int, ...]) -> str:
    top = "".join(LETTERS[r - 1] for r in grid[:3])
    bot = "".join(LETTERS[r - 1] for r in grid[3:])
    return top + "/" + bot


def parse_grid(text: str) -> tuple[int, ...]:
    """Parse "abd/efc" (or "abd efc") into a rank tuple."""
    letters = [c for c in text if c in LETTERS]
    if sorted(letters) != list(LETTERS):
        raise ValueError(f"bad grid {text!r}")
    return tuple(LETTERS.index(c) + 1 for c in letters)


def all_perms() -> list[Perm]:
    return [Perm(p) for p in itertools.permutations(POINTS)]
