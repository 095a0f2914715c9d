"""Directed-graph model of the d-sheeted branched cover of a marked disk.

The graph has interior vertices 1..n (one over each branch point), d left
boundary vertices 0_(j) and d right boundary vertices (n+1)_(j), and d
parallel edges e[i,j] (sheets j = 1..d) from level i to level i+1 for each
i = 0..n.  Sheet indices are cyclic with period d.

Self-functors of the free groupoid on this graph are stored as a vertex
permutation plus an edge -> path table, with endpoint consistency checked at
construction.  The base disk itself is modelled by the degenerate graph with
a single edge per level; `project` collapses sheets onto it.

Internally a directed edge step is a signed integer code: the forward edge
e[i,j] has code i*d + j, a backward traversal the negated code.  Everything
is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import words as _words
from .errors import BudgetExceededError, EndpointMismatchError, ParameterMismatchError


class Vertex(NamedTuple):
    level: int  # 0..n+1
    sheet: int  # 0 for interior vertices, 1..d on the two boundary columns


class Edge(NamedTuple):
    level: int  # 0..n
    sheet: int  # 1..d


def interior(i: int) -> Vertex:
    return Vertex(i, 0)


def left_boundary(j: int) -> Vertex:
    return Vertex(0, j)


def right_boundary(n: int, j: int) -> Vertex:
    return Vertex(n + 1, j)


def vertices(d: int, n: int) -> tuple[Vertex, ...]:
    """All n + 2d vertices in canonical order: interior, left, right."""
    return (
        tuple(interior(i) for i in range(1, n + 1))
        + tuple(left_boundary(j) for j in range(1, d + 1))
        + tuple(right_boundary(n, j) for j in range(1, d + 1))
    )


def edges(d: int, n: int) -> tuple[Edge, ...]:
    """All (n+1)d edges ordered by (level, sheet)."""
    return tuple(Edge(i, j) for i in range(n + 1) for j in range(1, d + 1))


def _vertex_index(d: int, n: int, v: Vertex) -> int:
    level, sheet = v
    if sheet == 0:
        if not 1 <= level <= n:
            raise ValueError(f"no interior vertex at level {level} for n={n}")
        return level - 1
    if not 1 <= sheet <= d:
        raise ValueError(f"boundary sheet must be in 1..{d}, got {sheet}")
    if level == 0:
        return n + sheet - 1
    if level == n + 1:
        return n + d + sheet - 1
    raise ValueError(f"no boundary vertex at level {level} for n={n}")


def _wrap(d: int, j: int) -> int:
    return (j - 1) % d + 1


def _edge_code(d: int, n: int, i: int, j: int) -> int:
    if not 0 <= i <= n:
        raise ValueError(f"edge level i must be in 0..{n}, got i={i}")
    return i * d + _wrap(d, j)


def _source(d: int, n: int, code: int) -> Vertex:
    level, sheet = divmod(code - 1, d)
    return Vertex(level, sheet + 1 if level == 0 else 0)


def _target(d: int, n: int, code: int) -> Vertex:
    level, sheet = divmod(code - 1, d)
    return Vertex(level + 1, sheet + 1 if level == n else 0)


def _step_ends(d: int, n: int, step: int) -> tuple[Vertex, Vertex]:
    if step > 0:
        return _source(d, n, step), _target(d, n, step)
    return _target(d, n, -step), _source(d, n, -step)


@dataclass(frozen=True)
class EdgePath:
    """Endpoint-compatible, freely reduced sequence of signed edge steps."""

    d: int
    n: int
    start: Vertex
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        _words.check_params(self.d, self.n)
        _vertex_index(self.d, self.n, self.start)  # validates the vertex
        at = self.start
        prev = 0
        for step in self.steps:
            if step == -prev:
                raise ValueError("path is not freely reduced")
            begin, end = _step_ends(self.d, self.n, step)
            if begin != at:
                raise EndpointMismatchError(
                    f"step over edge code {abs(step)} begins at {begin}, expected {at}"
                )
            at = end
            prev = step

    @property
    def end(self) -> Vertex:
        if not self.steps:
            return self.start
        return _step_ends(self.d, self.n, self.steps[-1])[1]

    @property
    def edge_steps(self) -> tuple[tuple[Edge, int], ...]:
        """Decoded steps as (edge, direction) with direction +1/-1."""
        out = []
        for step in self.steps:
            level, sheet = divmod(abs(step) - 1, self.d)
            out.append((Edge(level, sheet + 1), 1 if step > 0 else -1))
        return tuple(out)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return format_path(self)


def _reduce_steps(steps: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    budget = _words.LETTER_BUDGET
    for s in steps:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
            if len(out) > budget:
                raise BudgetExceededError(f"path exceeds the letter budget of {budget}")
    return tuple(out)


def path(d: int, n: int, steps: Iterable, start: Vertex | None = None) -> EdgePath:
    """Path from (level, sheet, direction) triples, freely reduced.

    `start` is only needed for the empty path; otherwise it is inferred
    from the first step and the whole chain is checked for compatibility.
    """
    _words.check_params(d, n)
    codes = [direction * _edge_code(d, n, i, j) for (i, j, direction) in steps]
    reduced = _reduce_steps(codes)
    if start is None:
        if not codes:
            raise ValueError("an empty path needs an explicit start vertex")
        start = _step_ends(d, n, codes[0])[0]
    return EdgePath(d, n, start, reduced)


def empty_path(d: int, n: int, at: Vertex) -> EdgePath:
    return EdgePath(d, n, at, ())


def path_reduce(d: int, n: int, steps: Iterable, start: Vertex | None = None) -> EdgePath:
    """Free reduction of a raw step sequence; same contract as path()."""
    return path(d, n, steps, start=start)


def path_compose(p: EdgePath, q: EdgePath) -> EdgePath:
    """Concatenation, defined when p ends where q starts."""
    _same_params(p, q)
    if p.end != q.start:
        raise EndpointMismatchError(
            f"cannot compose: first path ends at {p.end}, second starts at {q.start}"
        )
    out = list(p.steps)
    for s in q.steps:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return EdgePath(p.d, p.n, p.start, tuple(out))


def path_invert(p: EdgePath) -> EdgePath:
    return EdgePath(p.d, p.n, p.end, tuple(-s for s in reversed(p.steps)))


def edge_path(d: int, n: int, i: int, j: int, direction: int = 1) -> EdgePath:
    """Single-step path along e[i,j]."""
    return path(d, n, [(i, j, direction)])


def _same_params(a, b) -> None:
    if (a.d, a.n) != (b.d, b.n):
        raise ParameterMismatchError(
            f"mixed ambient parameters: (d={a.d}, n={a.n}) vs (d={b.d}, n={b.n})"
        )


@dataclass(frozen=True)
class GroupoidFunctor:
    """Self-functor: vertex permutation plus edge -> path images.

    Construction checks that every edge image runs from the image of the
    edge's source to the image of its target, and that all boundary
    vertices stay fixed (the basepoint lives on the left boundary).
    """

    d: int
    n: int
    vertex_images: tuple[Vertex, ...]  # indexed like vertices(d, n)
    edge_images: tuple[EdgePath, ...]  # indexed by edge code - 1

    def __post_init__(self) -> None:
        d, n = self.d, self.n
        verts = vertices(d, n)
        if len(self.vertex_images) != len(verts):
            raise ValueError("vertex map must cover every vertex")
        if sorted(self.vertex_images) != sorted(verts):
            raise ValueError("vertex map is not a permutation")
        for v in verts:
            if v.sheet != 0 and self.vertex(v) != v:
                raise ValueError(f"boundary vertex {v} must stay fixed")
        if len(self.edge_images) != (n + 1) * d:
            raise ValueError("edge map must cover every edge")
        for code, image in enumerate(self.edge_images, start=1):
            _same_params(self, image)
            want_start = self.vertex(_source(d, n, code))
            want_end = self.vertex(_target(d, n, code))
            if image.start != want_start or image.end != want_end:
                raise EndpointMismatchError(
                    f"image of edge code {code} runs {image.start} -> {image.end}, "
                    f"expected {want_start} -> {want_end}"
                )

    def vertex(self, v: Vertex) -> Vertex:
        return self.vertex_images[_vertex_index(self.d, self.n, v)]

    def edge(self, i: int, j: int) -> EdgePath:
        """Image of the edge e[i,j] (sheet wrapped mod d)."""
        return self.edge_images[_edge_code(self.d, self.n, i, j) - 1]


def apply_functor(F: GroupoidFunctor, p: EdgePath) -> EdgePath:
    """Image of a path: expand step by step, then freely reduce."""
    _same_params(F, p)
    images = F.edge_images
    out: list[int] = []
    budget = _words.LETTER_BUDGET
    for s in p.steps:
        img = images[abs(s) - 1].steps
        if s > 0:
            for t in img:
                if out and out[-1] == -t:
                    out.pop()
                else:
                    out.append(t)
        else:
            for t in reversed(img):
                if out and out[-1] == t:
                    out.pop()
                else:
                    out.append(-t)
        if len(out) > budget:
            raise BudgetExceededError(f"path exceeds the letter budget of {budget}")
    return EdgePath(F.d, F.n, F.vertex(p.start), tuple(out))


def compose_functors(F: GroupoidFunctor, G: GroupoidFunctor) -> GroupoidFunctor:
    """Composite that applies F first, then G."""
    _same_params(F, G)
    return GroupoidFunctor(
        F.d,
        F.n,
        tuple(G.vertex(v) for v in F.vertex_images),
        tuple(apply_functor(G, image) for image in F.edge_images),
    )


@lru_cache(maxsize=None)
def identity_functor(d: int, n: int) -> GroupoidFunctor:
    _words.check_params(d, n)
    return GroupoidFunctor(
        d,
        n,
        vertices(d, n),
        tuple(
            EdgePath(d, n, _source(d, n, c), (c,))
            for c in range(1, (n + 1) * d + 1)
        ),
    )


def _functor(d: int, n: int, swap: tuple[int, int], images: dict[Edge, list[tuple[int, int, int]]]) -> GroupoidFunctor:
    """Functor that swaps two interior vertices and overrides some edges."""
    vertex_images = list(vertices(d, n))
    a, b = swap
    vertex_images[a - 1], vertex_images[b - 1] = vertex_images[b - 1], vertex_images[a - 1]
    edge_images = []
    for code in range(1, (n + 1) * d + 1):
        level, sheet = divmod(code - 1, d)
        override = images.get(Edge(level, sheet + 1))
        if override is None:
            edge_images.append(EdgePath(d, n, _source(d, n, code), (code,)))
        else:
            edge_images.append(path(d, n, override))
    return GroupoidFunctor(d, n, tuple(vertex_images), tuple(edge_images))


def _check_twist_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"twist index i must be in 1..{n - 1}, got i={i}")


@lru_cache(maxsize=None)
def lifted_half_twist(d: int, n: int, i: int) -> GroupoidFunctor:
    """Lift of the half twist swapping branch points i and i+1.

    Swaps the interior vertices i and i+1 and maps, for every sheet j,
    e[i-1,j] -> e[i-1,j]*e[i,j+1], e[i,j] -> e[i,j+1]^-1,
    e[i+1,j] -> e[i,j]*e[i+1,j]; everything else is fixed.
    """
    _words.check_params(d, n)
    _check_twist_index(n, i)
    images: dict[Edge, list[tuple[int, int, int]]] = {}
    for j in range(1, d + 1):
        images[Edge(i - 1, j)] = [(i - 1, j, 1), (i, _wrap(d, j + 1), 1)]
        images[Edge(i, j)] = [(i, _wrap(d, j + 1), -1)]
        images[Edge(i + 1, j)] = [(i, j, 1), (i + 1, j, 1)]
    return _functor(d, n, (i, i + 1), images)


@lru_cache(maxsize=None)
def lifted_half_twist_inverse(d: int, n: int, i: int) -> GroupoidFunctor:
    """Lift of the inverse half twist; checked against lifted_half_twist.

    The edge table is the formal inverse of the lifted half twist
    (e[i-1,j] -> e[i-1,j]*e[i,j], e[i,j] -> e[i,j-1]^-1,
    e[i+1,j] -> e[i,j-1]*e[i+1,j]); construction verifies that composing
    with the lift in either order gives the identity functor.
    """
    _words.check_params(d, n)
    _check_twist_index(n, i)
    images: dict[Edge, list[tuple[int, int, int]]] = {}
    for j in range(1, d + 1):
        images[Edge(i - 1, j)] = [(i - 1, j, 1), (i, j, 1)]
        images[Edge(i, j)] = [(i, _wrap(d, j - 1), -1)]
        images[Edge(i + 1, j)] = [(i, _wrap(d, j - 1), 1), (i + 1, j, 1)]
    inverse = _functor(d, n, (i, i + 1), images)
    forward = lifted_half_twist(d, n, i)
    ident = identity_functor(d, n)
    if compose_functors(forward, inverse) != ident or compose_functors(inverse, forward) != ident:
        raise RuntimeError(
            f"inverse half-twist table fails the identity check for d={d}, n={n}, i={i}"
        )
    return inverse


@lru_cache(maxsize=None)
def dehn_twist(d: int, n: int, i: int, j: int) -> GroupoidFunctor:
    """Twist along the standard loop with indices (i, j), sheet mod d.

    Only the edge images are intrinsic; the interior swap i <-> i+1 is the
    unique vertex map making them endpoint-consistent, and the constructor
    check would reject anything else.
    """
    _words.check_params(d, n)
    _check_twist_index(n, i)
    jj = _wrap(d, j)
    j1 = _wrap(d, j + 1)
    images: dict[Edge, list[tuple[int, int, int]]] = {}
    for k in range(1, d + 1):
        if k == jj:
            images[Edge(i - 1, k)] = [(i - 1, k, 1), (i, j1, 1)]
            images[Edge(i, k)] = [(i, j1, -1)]
        elif k == j1:
            images[Edge(i - 1, k)] = [(i - 1, k, 1), (i, jj, 1)]
            images[Edge(i, k)] = [(i, jj, -1)]
        else:
            images[Edge(i - 1, k)] = [(i - 1, k, 1), (i, jj, 1)]
            images[Edge(i, k)] = [(i, jj, -1), (i, k, 1), (i, jj, -1)]
        if k == j1:
            images[Edge(i + 1, k)] = [(i, j1, 1), (i + 1, k, 1)]
        else:
            images[Edge(i + 1, k)] = [(i, jj, 1), (i + 1, k, 1)]
    return _functor(d, n, (i, i + 1), images)


# -- the base disk and the sheet-collapsing projection -----------------------
#
# The base graph has vertices 0..n+1 and a single edge per level; its paths
# and self-functors mirror the covering machinery in the degenerate d=1 case.

@dataclass(frozen=True)
class BasePath:
    """Freely reduced path in the base-disk graph (edge e[i] has code i+1)."""

    n: int
    start: int
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.start <= self.n + 1:
            raise ValueError(f"base vertex must be in 0..{self.n + 1}, got {self.start}")
        at = self.start
        prev = 0
        for s in self.steps:
            if s == -prev:
                raise ValueError("base path is not freely reduced")
            level = abs(s) - 1
            if not 0 <= level <= self.n:
                raise ValueError(f"base edge level must be in 0..{self.n}")
            begin, end = (level, level + 1) if s > 0 else (level + 1, level)
            if begin != at:
                raise EndpointMismatchError(
                    f"base step e[{level}] begins at {begin}, expected {at}"
                )
            at = end
            prev = s

    @property
    def end(self) -> int:
        if not self.steps:
            return self.start
        last = self.steps[-1]
        return abs(last) if last > 0 else abs(last) - 1


def base_path_reduce(n: int, steps: Iterable[int], start: int | None = None) -> BasePath:
    raw = list(steps)
    if start is None:
        if not raw:
            raise ValueError("an empty base path needs an explicit start vertex")
        first = raw[0]
        start = abs(first) - 1 if first > 0 else abs(first)
    return BasePath(n, start, _reduce_steps(raw))


@dataclass(frozen=True)
class BaseFunctor:
    """Self-functor of the base-disk graph."""

    n: int
    vertex_images: tuple[int, ...]  # indexed by vertex 0..n+1
    edge_images: tuple[BasePath, ...]  # indexed by level 0..n

    def __post_init__(self) -> None:
        if sorted(self.vertex_images) != list(range(self.n + 2)):
            raise ValueError("base vertex map is not a permutation")
        for level, image in enumerate(self.edge_images):
            if image.start != self.vertex_images[level] or image.end != self.vertex_images[level + 1]:
                raise EndpointMismatchError(f"image of base edge e[{level}] has wrong endpoints")


def base_half_twist(n: int, i: int) -> BaseFunctor:
    """Half twist on the base disk: swaps i, i+1; e[i] reverses, its
    neighbours pick up e[i] on the appropriate side."""
    if n < 2:
        raise ValueError(f"parameter n must be >= 2, got n={n}")
    _check_twist_index(n, i)
    vertex_images = list(range(n + 2))
    vertex_images[i], vertex_images[i + 1] = i + 1, i
    edge_images = []
    for level in range(n + 1):
        if level == i - 1:
            steps: tuple[int, ...] = (level + 1, i + 1)
        elif level == i:
            steps = (-(i + 1),)
        elif level == i + 1:
            steps = (i + 1, level + 1)
        else:
            steps = (level + 1,)
        start = vertex_images[level]
        edge_images.append(BasePath(n, start, steps))
    return BaseFunctor(n, tuple(vertex_images), tuple(edge_images))


def apply_base_functor(F: BaseFunctor, p: BasePath) -> BasePath:
    out: list[int] = []
    for s in p.steps:
        img = F.edge_images[abs(s) - 1].steps
        seq = img if s > 0 else tuple(-t for t in reversed(img))
        for t in seq:
            if out and out[-1] == -t:
                out.pop()
            else:
                out.append(t)
    return BasePath(p.n, F.vertex_images[p.start], tuple(out))


def project(p: EdgePath) -> BasePath:
    """Collapse sheets: e[i,j] -> e[i], boundary columns merge to 0 and n+1."""
    steps: list[int] = []
    for s in p.steps:
        level = (abs(s) - 1) // p.d
        code = level + 1 if s > 0 else -(level + 1)
        if steps and steps[-1] == -code:
            steps.pop()
        else:
            steps.append(code)
    return BasePath(p.n, p.start.level, tuple(steps))


def verify_lift(d: int, n: int, i: int) -> bool:
    """Whether projecting the lifted half twist recovers the base half twist
    on every generating edge."""
    lift = lifted_half_twist(d, n, i)
    base = base_half_twist(n, i)
    for code in range(1, (n + 1) * d + 1):
        level = (code - 1) // d
        downstairs = BasePath(n, level, (level + 1,))
        if project(lift.edge_images[code - 1]) != apply_base_functor(base, downstairs):
            return False
    return True


# -- text grammar ------------------------------------------------------------
#
# Edge token `e[i,j]` with optional `^-1`, joined by `*`; vertices render as
# `v[i]`, `v0[j]`, `vN1[j]`; an empty path renders as its start vertex.

def format_vertex(v: Vertex) -> str:
    if v.sheet == 0:
        return f"v[{v.level}]"
    return f"v0[{v.sheet}]" if v.level == 0 else f"vN1[{v.sheet}]"


def format_path(p: EdgePath) -> str:
    if not p.steps:
        return format_vertex(p.start)
    parts = []
    for (edge, direction) in p.edge_steps:
        parts.append(f"e[{edge.level},{edge.sheet}]" + ("^-1" if direction < 0 else ""))
    return "*".join(parts)


def parse_path(d: int, n: int, text: str) -> EdgePath:
    """Parse the path grammar; a lone vertex token is the empty path there."""
    _words.check_params(d, n)
    text = text.strip()
    if text.startswith("v"):
        if text.startswith("v0[") and text.endswith("]"):
            return empty_path(d, n, left_boundary(int(text[3:-1])))
        if text.startswith("vN1[") and text.endswith("]"):
            return empty_path(d, n, right_boundary(n, int(text[4:-1])))
        if text.startswith("v[") and text.endswith("]"):
            return empty_path(d, n, interior(int(text[2:-1])))
        raise ValueError(f"cannot parse vertex token {text!r}")
    steps: list[tuple[int, int, int]] = []
    for token in text.split("*"):
        token = token.strip()
        direction = 1
        if token.endswith("^-1"):
            direction = -1
            token = token[:-3]
        if not (token.startswith("e[") and token.endswith("]")):
            raise ValueError(f"cannot parse edge token {token!r}")
        try:
            i_text, j_text = token[2:-1].split(",")
            steps.append((int(i_text), int(j_text), direction))
        except ValueError:
            raise ValueError(f"cannot parse edge token {token!r}") from None
    return path(d, n, steps)
