"""Finite simple graphs on vertices 1..n, path squares and domination."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import DEFAULT_ENUMERATION_CAP, CapExceeded, ParseError


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        normal = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {{{u},{v}}} outside 1..{self.n}")
            normal.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normal))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def graph_square(g: Graph) -> Graph:
    """Add an edge between every pair of vertices at distance exactly two."""
    adj = g.adjacency()
    edges = set(g.edges)
    for v in g.vertices:
        for a in adj[v]:
            for b in adj[v]:
                if a < b:
                    edges.add((a, b))
    return Graph(g.n, frozenset(edges))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v) | {v}


@dataclass(frozen=True)
class DominationSummary:
    gamma: int
    gamma_prime: int
    minimal_sets: tuple[frozenset[int], ...]


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _unmask(m: int) -> frozenset[int]:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def _is_dominating(closed: list[int], full: int, d: int) -> bool:
    dominated = 0
    for v in range(1, len(closed)):
        if d >> v & 1:
            dominated |= closed[v]
    return dominated == full


def minimal_dominating_sets(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> DominationSummary:
    """Enumerate all inclusion-minimal dominating sets of ``g``.

    Branch on the undominated vertex with the fewest remaining candidates; a
    branch dies once some chosen vertex has lost every private neighbour,
    since adding vertices never restores one.
    """
    n = g.n
    adj = g.adjacency()
    closed = [0] * (n + 1)
    for v in g.vertices:
        closed[v] = _mask(adj[v]) | (1 << v)
    full = _mask(g.vertices)
    found: list[int] = []

    def has_private(x: int, d: int) -> bool:
        nb = closed[x]
        for v in range(1, n + 1):
            if nb >> v & 1 and closed[v] & d == 1 << x:
                return True
        return False

    def search(d: int, dominated: int, excluded: int) -> None:
        if dominated == full:
            found.append(d)
            if len(found) > cap:
                raise CapExceeded("minimal dominating set enumeration", cap)
            return
        best = -1
        best_cands = 0
        best_count = n + 2
        rest = full & ~dominated
        v = 1
        while rest >> v:
            if rest >> v & 1:
                cands = closed[v] & ~excluded
                c = bin(cands).count("1")
                if c == 0:
                    return
                if c < best_count:
                    best, best_cands, best_count = v, cands, c
            v += 1
        tried = 0
        for w in range(1, n + 1):
            if not best_cands >> w & 1:
                continue
            nd = d | 1 << w
            ok = True
            x = 1
            while nd >> x:
                if nd >> x & 1 and not has_private(x, nd):
                    ok = False
                    break
                x += 1
            if ok:
                search(nd, dominated | closed[w], excluded | tried)
            tried |= 1 << w

    search(0, 0, 0)

    minimal = []
    for d in found:
        if not _is_dominating(closed, full, d):
            continue
        if any(_is_dominating(closed, full, d & ~(1 << x)) for x in range(1, n + 1) if d >> x & 1):
            continue
        minimal.append(_unmask(d))
    minimal.sort(key=lambda s: tuple(sorted(s)))
    sizes = [len(s) for s in minimal]
    return DominationSummary(min(sizes), max(sizes), tuple(minimal))


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    d = set(d)
    return all(closed_neighborhood(g, v) & d for v in g.vertices)


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <N>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u == v or not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"invalid edge {u} {v} for n={n}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <N>'")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
