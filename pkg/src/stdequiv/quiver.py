"""Finite quivers: acyclicity, the inductive source layering, paths.

Vertices are the integers 1..n.  Arrows carry unique string labels and may
be parallel.  Paths compose right to left: p after q is written p*q and
traverses q first.
"""

from __future__ import annotations

from dataclasses import dataclass


class QuiverError(ValueError):
    pass


class CyclicQuiverError(QuiverError):
    def __init__(self, message, cycle=None):
        super().__init__(message)
        self.cycle = cycle


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """A directed path; `arrows` lists labels in traversal order."""

    source: int
    target: int
    arrows: tuple

    @property
    def length(self) -> int:
        return len(self.arrows)

    def display(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return "*".join(reversed(self.arrows))

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def __repr__(self):
        return self.display()


def trivial_path(vertex: int) -> Path:
    return Path(vertex, vertex, ())


def compose_paths(p: Path, q: Path) -> Path:
    """p*q, traversing q first; requires target(q) = source(p)."""
    if q.target != p.source:
        raise QuiverError(f"paths not composable: {p} after {q}")
    return Path(q.source, p.target, q.arrows + p.arrows)


class Quiver:
    """A finite directed multigraph on vertices 1..num_vertices."""

    def __init__(self, num_vertices: int, arrows):
        if num_vertices < 0:
            raise QuiverError("negative vertex count")
        self.num_vertices = num_vertices
        built = []
        labels = set()
        for label, source, target in arrows:
            if not (1 <= source <= num_vertices and 1 <= target <= num_vertices):
                raise QuiverError(f"arrow {label}: {source}->{target} leaves vertex range 1..{num_vertices}")
            if label in labels:
                raise QuiverError(f"duplicate arrow label {label!r}")
            labels.add(label)
            built.append(Arrow(str(label), source, target))
        self.arrows = tuple(built)
        self.arrow_by_label = {a.label: a for a in self.arrows}
        self._into = {v: tuple(a for a in self.arrows if a.target == v) for v in self.vertices}
        self._out = {v: tuple(a for a in self.arrows if a.source == v) for v in self.vertices}

    @property
    def vertices(self):
        return range(1, self.num_vertices + 1)

    def arrows_into(self, v: int):
        return self._into[v]

    def arrows_out_of(self, v: int):
        return self._out[v]

    def arrow_multiplicity(self, i: int, j: int) -> int:
        return sum(1 for a in self.arrows if a.source == i and a.target == j)

    def arrow_support(self):
        """Set of ordered pairs (i, j) carrying at least one arrow."""
        return {(a.source, a.target) for a in self.arrows}

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.arrows == other.arrows

    def __repr__(self):
        body = ", ".join(f"{a.label}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.num_vertices}; {body})"

    def find_cycle(self):
        """A directed cycle as a vertex list [v0, ..., v0], or None."""
        color = {v: 0 for v in self.vertices}
        parent = {}
        for start in self.vertices:
            if color[start]:
                continue
            stack = [(start, iter(self._out[start]))]
            color[start] = 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for arrow in it:
                    w = arrow.target
                    if color[w] == 0:
                        color[w] = 1
                        parent[w] = v
                        stack.append((w, iter(self._out[w])))
                        advanced = True
                        break
                    if color[w] == 1:
                        cycle = [w, v]
                        cur = v
                        while cur != w:
                            cur = parent[cur]
                            cycle.append(cur)
                        cycle.reverse()
                        return cycle
                if not advanced:
                    color[v] = 2
                    stack.pop()
        return None

    def is_acyclic(self) -> bool:
        return self.find_cycle() is None

    def source_layers(self) -> "Layering":
        """The inductive source layering and per-vertex degrees.

        A vertex enters layer d as soon as all its incoming arrows start at
        vertices of strictly smaller degree; layer 0 is the set of sources.
        Cyclic quivers never exhaust their vertex set and are rejected.
        """
        degrees = {}
        d = 0
        while len(degrees) < self.num_vertices:
            placed = []
            for v in self.vertices:
                if v in degrees:
                    continue
                if all(a.source in degrees and degrees[a.source] <= d - 1 for a in self._into[v]):
                    placed.append(v)
            if not placed:
                raise CyclicQuiverError(
                    "source layering does not exhaust the vertices", cycle=self.find_cycle()
                )
            for v in placed:
                degrees[v] = d
            d += 1
        return Layering(tuple(degrees[v] for v in self.vertices))

    def longest_path_length(self, vertex: int) -> int:
        """Length of the longest path ending at `vertex`, by exhaustive search.

        Deliberately enumerates every reversed path instead of memoizing, so
        it stays an independent check on the layering.
        """
        if not self.is_acyclic():
            raise CyclicQuiverError("longest path undefined on cyclic quiver", cycle=self.find_cycle())
        best = 0
        stack = [(vertex, 0)]
        while stack:
            v, depth = stack.pop()
            if depth > best:
                best = depth
            for a in self._into[v]:
                stack.append((a.source, depth + 1))
        return best

    def enumerate_paths(self):
        """All directed paths including the trivial ones, in canonical order."""
        cycle = self.find_cycle()
        if cycle is not None:
            raise CyclicQuiverError("path set is infinite on a cyclic quiver", cycle=cycle)
        paths = [trivial_path(v) for v in self.vertices]
        frontier = list(paths)
        while frontier:
            extended = []
            for p in frontier:
                for a in self._out[p.target]:
                    extended.append(Path(p.source, a.target, p.arrows + (a.label,)))
            paths.extend(extended)
            frontier = extended
        paths.sort(key=Path.sort_key)
        return paths


@dataclass(frozen=True)
class Layering:
    """Per-vertex degrees plus the nested layer sets they induce."""

    degrees: tuple

    def degree(self, vertex: int) -> int:
        return self.degrees[vertex - 1]

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else 0

    def layer(self, d: int) -> frozenset:
        return frozenset(v for v, deg in enumerate(self.degrees, start=1) if deg <= d)

    def layers(self):
        return [self.layer(d) for d in range(self.max_degree + 1)]
