"""Flag complexes presented by their graphs, with bitmask vertex sets.

Vertices are labelled 1..m (m <= 63 so subsets fit in a machine word).
A complex is determined by its graph alone: the faces are exactly the
cliques, so every subcomplex query reduces to a computation on an
induced subgraph.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Iterator

MAX_VERTICES = 63


def _bits(mask: int) -> Iterator[int]:
    # ascending 1-based vertex labels of a bitmask
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


class VertexSet:
    """An immutable subset of the vertex set, iterated in ascending order."""

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        if isinstance(vertices, VertexSet):
            self.mask = vertices.mask
            return
        mask = 0
        for v in vertices:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"vertex labels are positive integers, got {v!r}")
            mask |= 1 << (v - 1)
        self.mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        vs = cls.__new__(cls)
        vs.mask = mask
        return vs

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __contains__(self, v: int) -> bool:
        return v >= 1 and (self.mask >> (v - 1)) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~other.mask)

    def max(self) -> int:
        if not self.mask:
            raise ValueError("max() of an empty vertex set")
        return self.mask.bit_length()

    def min(self) -> int:
        if not self.mask:
            raise ValueError("min() of an empty vertex set")
        return (self.mask & -self.mask).bit_length()

    def render(self, m: int) -> str:
        """Digit string when all labels are single digits, brace list otherwise."""
        if m <= 9:
            return "".join(str(v) for v in self)
        return "{" + ",".join(str(v) for v in self) + "}"

    def __repr__(self) -> str:
        return "VertexSet({%s})" % ",".join(str(v) for v in self)


class Cycle:
    """A closed edge path (v1, ..., vk, v1) with k >= 3 edges."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(vertices)
        if len(vs) < 4 or vs[0] != vs[-1]:
            raise ValueError(f"a cycle is a closed sequence with >= 3 edges, got {vs}")
        self.vertices = vs

    def __len__(self) -> int:
        # number of edges
        return len(self.vertices) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        vs = self.vertices
        for t in range(len(vs) - 1):
            u, v = vs[t], vs[t + 1]
            yield (u, v) if u < v else (v, u)

    def support(self) -> VertexSet:
        return VertexSet(self.vertices[:-1])

    def normalized(self) -> "Cycle":
        """Rotate the least vertex to the front, orient toward its lesser neighbour."""
        open_ = list(self.vertices[:-1])
        r = open_.index(min(open_))
        rot = open_[r:] + open_[:r]
        if rot[-1] < rot[1]:
            rot = [rot[0]] + rot[:0:-1]
        return Cycle(tuple(rot) + (rot[0],))

    def __eq__(self, other) -> bool:
        return isinstance(other, Cycle) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return "Cycle(%s)" % (self.vertices,)


class GraphParseError(ValueError):
    """Raised when a graph description cannot be parsed."""


class FlagComplex:
    """The clique complex of a finite simple graph on vertices 1..m."""

    __slots__ = ("m", "_adj", "_full")

    def __init__(self, m: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= m <= MAX_VERTICES:
            raise GraphParseError(f"vertex count must be in 1..{MAX_VERTICES}, got {m}")
        adj = [0] * (m + 1)
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphParseError(f"edge {e!r} is not a pair") from None
            if not (1 <= u <= m and 1 <= v <= m):
                raise GraphParseError(f"edge {e} out of range 1..{m}")
            if u == v:
                raise GraphParseError(f"loop edge {e} not allowed")
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        self.m = m
        self._adj = tuple(adj)
        self._full = (1 << m) - 1

    # -- construction from external formats ---------------------------------

    @classmethod
    def from_text(cls, text: str) -> "FlagComplex":
        """Parse "m on line 1, one edge 'i j' per following line"."""
        lines = text.splitlines()
        header = None
        edges = []
        for ln, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if header is None:
                try:
                    header = int(line)
                except ValueError:
                    raise GraphParseError(f"line {ln}: expected vertex count, got {raw!r}")
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphParseError(f"line {ln}: expected 'i j', got {raw!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {ln}: non-integer endpoint in {raw!r}")
            edges.append((u, v))
        if header is None:
            raise GraphParseError("empty graph description")
        try:
            return cls(header, edges)
        except GraphParseError as exc:
            raise GraphParseError(str(exc)) from None

    @classmethod
    def from_json_obj(cls, obj) -> "FlagComplex":
        if not isinstance(obj, dict) or "m" not in obj:
            raise GraphParseError('JSON graph must be {"m": int, "edges": [[i,j],...]}')
        edges = obj.get("edges", [])
        return cls(obj["m"], [tuple(e) for e in edges])

    @classmethod
    def from_path(cls, path: str) -> "FlagComplex":
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                raise GraphParseError(f"{path}: invalid JSON ({exc})") from None
            return cls.from_json_obj(obj)
        return cls.from_text(text)

    # -- basic queries -------------------------------------------------------

    @property
    def edges(self) -> list[tuple[int, int]]:
        return self.induced_edges(self._full)

    def adjacent(self, u: int, v: int) -> bool:
        return (self._adj[u] >> (v - 1)) & 1 == 1

    def neighbours(self, v: int) -> VertexSet:
        return VertexSet.from_mask(self._adj[v])

    def full_set(self) -> VertexSet:
        return VertexSet.from_mask(self._full)

    def _as_mask(self, J) -> int:
        if isinstance(J, VertexSet):
            mask = J.mask
        elif isinstance(J, int):
            mask = J
        else:
            mask = _mask_of(J)
        if mask & ~self._full:
            raise ValueError(f"vertex set {bin(mask)} not contained in 1..{self.m}")
        return mask

    def induced_edges(self, J) -> list[tuple[int, int]]:
        """Edges of the induced subgraph on J, in lexicographic order."""
        jm = self._as_mask(J)
        adj = self._adj
        out = []
        for u in _bits(jm):
            rest = adj[u] & jm & ~((1 << u) - 1)
            for v in _bits(rest):
                out.append((u, v))
        return out

    def induced_edge_count(self, J) -> int:
        jm = self._as_mask(J)
        total = 0
        for u in _bits(jm):
            total += (self._adj[u] & jm & ~((1 << u) - 1)).bit_count()
        return total

    # -- components, theta, paths --------------------------------------------

    def _component_masks(self, jm: int) -> list[int]:
        adj = self._adj
        out = []
        rest = jm
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= adj[v]
                frontier = grow & jm & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def components(self, J) -> list[VertexSet]:
        """Path components of the induced graph on J, ordered by least element."""
        return [VertexSet.from_mask(c) for c in self._component_masks(self._as_mask(J))]

    def _theta_mask(self, jm: int) -> int:
        if not jm:
            raise ValueError("theta of the empty vertex set is undefined")
        mx_bit = 1 << (jm.bit_length() - 1)
        theta = 0
        for comp in self._component_masks(jm):
            if not comp & mx_bit:
                theta |= comp & -comp
        return theta

    def theta(self, J) -> VertexSet:
        """Least vertex of every component of K_J not containing max(J)."""
        return VertexSet.from_mask(self._theta_mask(self._as_mask(J)))

    def lex_path(self, J, start: int, goal: int) -> tuple[int, ...]:
        """Lexicographically least shortest path start -> goal inside K_J.

        BFS from `start` expanding neighbours in ascending order; the first
        discoverer of a vertex is its parent, which yields the lex-least
        shortest path to every reachable vertex.
        """
        jm = self._as_mask(J)
        for v in (start, goal):
            if not (jm >> (v - 1)) & 1:
                raise ValueError(f"vertex {v} not in J")
        if start == goal:
            return (start,)
        adj = self._adj
        parent = {start: 0}
        queue = deque([start])
        seen = 1 << (start - 1)
        while queue:
            u = queue.popleft()
            grow = adj[u] & jm & ~seen
            if grow:
                seen |= grow
                for v in _bits(grow):
                    parent[v] = u
                    if v == goal:
                        path = [v]
                        while path[-1] != start:
                            path.append(parent[path[-1]])
                        path.reverse()
                        return tuple(path)
                    queue.append(v)
        raise ValueError(f"vertices {start} and {goal} lie in different components of K_J")

    # -- spanning forests and cycle generators --------------------------------

    def _forest(self, jm: int):
        """Ascending BFS forest: (parent, depth, forest edge set, roots)."""
        adj = self._adj
        parent: dict[int, int] = {}
        depth: dict[int, int] = {}
        forest: set[tuple[int, int]] = set()
        roots = []
        visited = 0
        rest = jm
        while rest:
            root = (rest & -rest).bit_length()
            roots.append(root)
            parent[root] = 0
            depth[root] = 0
            seen = 1 << (root - 1)
            queue = deque([root])
            while queue:
                u = queue.popleft()
                grow = adj[u] & jm & ~seen
                if grow:
                    seen |= grow
                    for v in _bits(grow):
                        parent[v] = u
                        depth[v] = depth[u] + 1
                        forest.add((u, v) if u < v else (v, u))
                        queue.append(v)
            visited |= seen
            rest = jm & ~visited
        return parent, depth, forest, roots

    def spanning_forest(self, J) -> tuple[tuple[int, int], ...]:
        """Deterministic BFS spanning forest of the induced graph on J."""
        jm = self._as_mask(J)
        _, _, forest, _ = self._forest(jm)
        return tuple(sorted(forest))

    def _forest_path(self, parent, depth, u: int, v: int) -> list[int]:
        up_u, up_v = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            up_u.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            up_v.append(b)
        while a != b:
            a = parent[a]
            b = parent[b]
            up_u.append(a)
            up_v.append(b)
        return up_u + up_v[-2::-1]

    def fundamental_cycles(self, J) -> list[Cycle]:
        """One normalized cycle per non-forest edge of the induced graph."""
        jm = self._as_mask(J)
        parent, depth, forest, _ = self._forest(jm)
        out = []
        for u, v in self.induced_edges(jm):
            if (u, v) in forest:
                continue
            path = self._forest_path(parent, depth, u, v)
            out.append(Cycle(tuple(path) + (u,)).normalized())
        return out

    def triangles(self, J) -> list[tuple[int, int, int]]:
        """All 3-cliques of the induced graph, lexicographically ordered."""
        jm = self._as_mask(J)
        adj = self._adj
        out = []
        for a in _bits(jm):
            above_a = jm & adj[a] & ~((1 << a) - 1)
            for b in _bits(above_a):
                for c in _bits(above_a & adj[b] & ~((1 << b) - 1)):
                    out.append((a, b, c))
        return out

    def prune_cycles(self, J, cycles: list[Cycle]) -> list[Cycle]:
        """Drop fundamental cycles made redundant by triangles of K_J.

        A triangle relates its three edge generators without conjugation,
        so whenever two of its edges are expressible (forest edges, or
        generators eliminated earlier) the third generator is redundant.
        The surviving cycles still generate Pi_1(K_J).
        """
        jm = self._as_mask(J)
        _, _, forest, _ = self._forest(jm)
        defining: list[tuple[tuple[int, int], Cycle]] = []
        for cyc in cycles:
            non_forest = [e for e in cyc.edges() if e not in forest]
            if len(non_forest) != 1:
                raise ValueError(f"{cyc!r} is not a fundamental cycle of this forest")
            defining.append((non_forest[0], cyc))
        expressible = set(forest)
        active = {e for e, _ in defining}
        tris = self.triangles(jm)
        changed = True
        while changed:
            changed = False
            for a, b, c in tris:
                loose = [e for e in ((a, b), (b, c), (a, c)) if e not in expressible]
                if len(loose) == 1 and loose[0] in active:
                    active.discard(loose[0])
                    expressible.add(loose[0])
                    changed = True
        return [cyc for e, cyc in defining if e in active]


def cycle_graph(m: int) -> FlagComplex:
    """The m-cycle 1-2-...-m-1."""
    if m < 3:
        raise ValueError("a cycle graph needs at least 3 vertices")
    return FlagComplex(m, [(i, i + 1) for i in range(1, m)] + [(m, 1)])


def complete_graph(m: int) -> FlagComplex:
    return FlagComplex(m, [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)])


def path_graph(m: int) -> FlagComplex:
    return FlagComplex(m, [(i, i + 1) for i in range(1, m)])


def edgeless_graph(m: int) -> FlagComplex:
    return FlagComplex(m, [])
