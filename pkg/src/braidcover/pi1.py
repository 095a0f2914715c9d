"""Translation between basepoint loops in the cover graph and free-group words.

The basepoint is the left boundary vertex 0_(1).  A fixed spanning tree --
all edges on levels 0 and n, plus the sheet-1 edge on every middle level --
leaves exactly (d-1)(n-1) non-tree edges e[i,j] (1 <= i <= n-1, 2 <= j <= d),
matching the rank of the surface group.  The tree is chosen so that the
standard non-tree generator of e[i,j] is exactly the inverse of the prefix
loop y[i,j] = x[i,1]*...*x[i,j-1]; rewriting a loop is then a single pass
with O(d) work per step, and converting a word back is concatenation of the
defining x-loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import groupoid, words
from .groupoid import Edge, EdgePath, GroupoidFunctor, Vertex, left_boundary
from .words import FreeAutomorphism, Word


@dataclass(frozen=True)
class SpanningTree:
    """The fixed spanning tree: levels 0 and n entirely, sheet 1 in between."""

    d: int
    n: int

    @property
    def edges(self) -> frozenset[Edge]:
        d, n = self.d, self.n
        tree = {Edge(0, j) for j in range(1, d + 1)}
        tree |= {Edge(i, 1) for i in range(1, n)}
        tree |= {Edge(n, j) for j in range(1, d + 1)}
        return frozenset(tree)

    @property
    def non_tree_edges(self) -> tuple[Edge, ...]:
        return tuple(
            Edge(i, j) for i in range(1, self.n) for j in range(2, self.d + 1)
        )

    def contains(self, edge: Edge) -> bool:
        return edge.level in (0, self.n) or edge.sheet == 1


def spanning_tree(d: int, n: int) -> SpanningTree:
    words.check_params(d, n)
    return SpanningTree(d, n)


def basepoint(d: int, n: int) -> Vertex:
    return left_boundary(1)


@lru_cache(maxsize=None)
def base_path(d: int, n: int, i: int) -> EdgePath:
    """The tree path p_i = e[0,1]*e[1,1]*...*e[i-1,1] from 0_(1) to vertex i."""
    words.check_params(d, n)
    if not 1 <= i <= n - 1:
        raise ValueError(f"path index i must be in 1..{n - 1}, got i={i}")
    return groupoid.path(d, n, [(level, 1, 1) for level in range(i)])


@lru_cache(maxsize=None)
def loop_x(d: int, n: int, i: int, j: int) -> EdgePath:
    """Basepoint loop x[i,j] = p_i * e[i,j] * e[i,j+1]^-1 * p_i^-1, j mod d."""
    p = base_path(d, n, i)
    steps = [(level, 1, 1) for level in range(i)]
    steps += [(i, j, 1), (i, j + 1, -1)]
    steps += [(level, 1, -1) for level in reversed(range(i))]
    return groupoid.path(d, n, steps, start=p.start)


@lru_cache(maxsize=None)
def loop_y(d: int, n: int, i: int, j: int) -> EdgePath:
    """Basepoint loop y[i,j] = p_i * e[i,1] * e[i,j]^-1 * p_i^-1 (empty at j=1)."""
    p = base_path(d, n, i)
    steps = [(level, 1, 1) for level in range(i)]
    steps += [(i, 1, 1), (i, j, -1)]
    steps += [(level, 1, -1) for level in reversed(range(i))]
    return groupoid.path(d, n, steps, start=p.start)


def loop_to_word(p: EdgePath) -> Word:
    """Rewrite a basepoint loop as a reduced word in the x[i,j] basis.

    Tree steps contribute nothing; a forward non-tree step over e[i,j]
    contributes the inverse prefix x[i,j-1]^-1*...*x[i,1]^-1 and a backward
    one the prefix itself.
    """
    d, n = p.d, p.n
    base = basepoint(d, n)
    if p.start != base or p.end != base:
        raise ValueError(f"loop must start and end at {base}, got {p.start} -> {p.end}")
    span = d - 1
    out: list[int] = []
    for s in p.steps:
        level, sheet = divmod(abs(s) - 1, d)
        sheet += 1
        if level == 0 or level == n or sheet == 1:
            continue
        gen_base = (level - 1) * span
        contribution = (
            (-(gen_base + t) for t in range(sheet - 1, 0, -1))
            if s > 0
            else (gen_base + t for t in range(1, sheet))
        )
        for c in contribution:
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
    return Word(d, n, tuple(out))


def word_to_loop(w: Word) -> EdgePath:
    """Concatenation of the defining x-loops, one per letter, reduced."""
    d, n = w.d, w.n
    span = d - 1
    steps: list[tuple[int, int, int]] = []
    for c in w.codes:
        i, j = (abs(c) - 1) // span + 1, (abs(c) - 1) % span + 1
        x_steps = [(level, 1, 1) for level in range(i)]
        x_steps += [(i, j, 1), (i, j + 1, -1)]
        x_steps += [(level, 1, -1) for level in reversed(range(i))]
        if c < 0:
            x_steps = [(a, b, -direction) for (a, b, direction) in reversed(x_steps)]
        steps.extend(x_steps)
    return groupoid.path(d, n, steps, start=basepoint(d, n))


def functor_to_automorphism(F: GroupoidFunctor) -> FreeAutomorphism:
    """Action of a basepoint-fixing functor on the surface group."""
    d, n = F.d, F.n
    base = basepoint(d, n)
    if F.vertex(base) != base:
        raise ValueError(f"functor moves the basepoint {base}")
    images = tuple(
        loop_to_word(groupoid.apply_functor(F, loop_x(d, n, i, j)))
        for (i, j) in words.symbols(d, n)
    )
    return FreeAutomorphism(d, n, images)
