"""Simplicial complexes given by facets, and the combinatorics around them."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DEFAULT_SEARCH_CAP, CapExceeded, ParseError, face_cap
from .ideal import (
    SquarefreeIdeal,
    from_mask,
    minimal_primes,
    minimal_transversal_masks,
    support_key,
    to_mask,
)


def maximalize(sets: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Keep only the inclusion-maximal sets, in canonical order."""
    kept: list[frozenset[int]] = []
    for s in sorted({frozenset(s) for s in sets}, key=len, reverse=True):
        if not any(s <= k for k in kept):
            kept.append(s)
    return tuple(sorted(kept, key=support_key))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on the vertex universe 1..n.

    ``facets == ()`` is the void complex; ``facets == (frozenset(),)`` is the
    irrelevant complex whose only face is the empty set.
    """

    n: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex universe needs n >= 1, got {self.n}")
        for f in self.facets:
            if not all(1 <= v <= self.n for v in f):
                raise ValueError(f"facet {sorted(f)} outside 1..{self.n}")
        object.__setattr__(self, "facets", maximalize(self.facets))

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | None = None) -> SimplicialComplex:
        return cls(n, (frozenset(vertices if vertices is not None else range(1, n + 1)),))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def covers_vertices(self) -> bool:
        return frozenset().union(*self.facets) == frozenset(range(1, self.n + 1))

    @property
    def dim(self) -> int:
        if not self.facets:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def is_face(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def facet_masks(self) -> list[int]:
        return [to_mask(f) for f in self.facets]


def face_masks(c: SimplicialComplex, cap: int | None = None) -> set[int]:
    """All faces as bitmasks, the empty face included unless the complex is void."""
    cap = face_cap() if cap is None else cap
    faces: set[int] = set()
    for m in c.facet_masks():
        s = m
        while True:
            faces.add(s)
            if s == 0:
                break
            s = (s - 1) & m
        if len(faces) > cap:
            raise CapExceeded("face enumeration", cap)
    return faces


def faces(c: SimplicialComplex, cap: int | None = None) -> list[frozenset[int]]:
    return sorted((from_mask(m) for m in face_masks(c, cap)), key=lambda s: (len(s), support_key(s)))


def facet_complex(i: SquarefreeIdeal) -> SimplicialComplex:
    if i.unit or i.is_zero:
        raise ValueError("facet complex needs a proper nonzero ideal")
    return SimplicialComplex(i.ambient_n, i.generators)


def stanley_reisner_complex(i: SquarefreeIdeal) -> SimplicialComplex:
    """Faces are the supports containing no generator."""
    if i.unit:
        raise ValueError("the unit ideal has the void complex; not supported here")
    full = frozenset(range(1, i.ambient_n + 1))
    if i.is_zero:
        return SimplicialComplex(i.ambient_n, (full,))
    return SimplicialComplex(i.ambient_n, tuple(full - p for p in minimal_primes(i).primes))


def stanley_reisner_ideal(c: SimplicialComplex) -> SquarefreeIdeal:
    """Ideal of minimal non-faces."""
    if c.is_void:
        return SquarefreeIdeal.unit_ideal(c.n)
    full = to_mask(range(1, c.n + 1))
    complements = [full & ~m for m in c.facet_masks()]
    if 0 in complements:
        return SquarefreeIdeal.zero(c.n)
    return SquarefreeIdeal(c.n, tuple(from_mask(m) for m in minimal_transversal_masks(complements)))


@dataclass(frozen=True)
class FHVectors:
    dim: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    euler: int
    reduced_euler: int


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """h_i = sum_j (-1)^(i-j) C(d-j, i-j) f_{j-1}, with d = len(f) - 1."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (i - j) * comb(d - j, i - j) * f[j] for j in range(i + 1)) for i in range(d + 1)
    )


def fh_vectors(c: SimplicialComplex, cap: int | None = None) -> FHVectors:
    if c.is_void:
        raise ValueError("the void complex has no f-vector (f_-1 would be 0)")
    dim = c.dim
    counts = [0] * (dim + 2)
    for m in face_masks(c, cap):
        counts[m.bit_count()] += 1
    f = tuple(counts)
    euler = sum((-1) ** i * f[i + 1] for i in range(dim + 1))
    return FHVectors(dim, f, h_from_f(f), euler, euler - 1)


def _check_permutation(c: SimplicialComplex, order: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    order = [frozenset(f) for f in order]
    if sorted(order, key=support_key) != sorted(c.facets, key=support_key):
        raise ValueError("order must be a permutation of the facets")
    return order


def _shells_after(placed: Sequence[frozenset[int]], f: frozenset[int]) -> bool:
    if not placed:
        return True
    singles = set()
    for g in placed:
        diff = f - g
        if len(diff) == 1:
            singles |= diff
    return all((f - g) & singles for g in placed)


def is_shelling_order(c: SimplicialComplex, order: Sequence[Iterable[int]]) -> bool:
    """Non-pure shelling test: every earlier facet is 'repaired' by a one-vertex difference."""
    order = _check_permutation(c, order)
    return all(_shells_after(order[:j], order[j]) for j in range(1, len(order)))


def indexed_facets(n: int) -> list[frozenset[int]]:
    """Facets F_1..F_{n-4} of the facet complex of NI(P_n^2), n >= 7, in their natural index."""
    if n < 7:
        raise ValueError(f"indexed facets need n >= 7, got {n}")
    fs = [frozenset((1, 2, 3))]
    fs.extend(frozenset(range(i, i + 5)) for i in range(2, n - 4))
    fs.append(frozenset((n - 2, n - 1, n)))
    return fs


def paper_shelling_order(n: int) -> tuple[frozenset[int], ...]:
    """(F_2, ..., F_{n-5}, F_1, F_{n-4})."""
    fs = indexed_facets(n)
    return tuple(fs[1:-1]) + (fs[0], fs[-1])


def find_shelling(c: SimplicialComplex, cap: int = DEFAULT_SEARCH_CAP) -> tuple[frozenset[int], ...] | None:
    if c.is_void:
        raise ValueError("the void complex has no facets to order")
    facets = sorted(c.facets, key=lambda f: (-len(f), support_key(f)))
    r = len(facets)
    used = [False] * r
    chosen: list[frozenset[int]] = []
    nodes = 0

    def extend() -> bool:
        nonlocal nodes
        if len(chosen) == r:
            return True
        for k in range(r):
            if used[k]:
                continue
            nodes += 1
            if nodes > cap:
                raise CapExceeded("shelling search", cap)
            if not _shells_after(chosen, facets[k]):
                continue
            used[k] = True
            chosen.append(facets[k])
            if extend():
                return True
            chosen.pop()
            used[k] = False
        return False

    return tuple(chosen) if extend() else None


def _free_vertices(facets: frozenset[frozenset[int]]) -> list[tuple[int, frozenset[int]]]:
    owner: dict[int, list[frozenset[int]]] = {}
    for f in facets:
        for v in f:
            owner.setdefault(v, []).append(f)
    return sorted((v, fs[0]) for v, fs in owner.items() if len(fs) == 1)


def has_free_vertex_property(c: SimplicialComplex, max_depth: int = 10_000) -> bool:
    """Recursive free vertex property; at most one facet counts as a simplex."""
    memo: dict[frozenset[frozenset[int]], bool] = {}

    def holds(facets: frozenset[frozenset[int]], depth: int) -> bool:
        if len(facets) <= 1:
            return True
        if depth > max_depth:
            raise CapExceeded("free vertex recursion depth", max_depth)
        cached = memo.get(facets)
        if cached is not None:
            return cached
        result = False
        for x, owner in _free_vertices(facets):
            others = facets - {owner}
            without_x = frozenset(maximalize(others | {owner - {x}}))
            if holds(others, depth + 1) and holds(without_x, depth + 1):
                result = True
                break
        memo[facets] = result
        return result

    return holds(frozenset(c.facets), 0)


def alexander_dual_complex(c: SimplicialComplex) -> SimplicialComplex:
    """Faces are the complements of non-faces of ``c``."""
    full = to_mask(range(1, c.n + 1))
    if c.is_void:
        raise ValueError("the Alexander dual of the void complex is the full simplex; rejected")
    complements = [full & ~m for m in c.facet_masks()]
    if 0 in complements:
        raise ValueError("the Alexander dual of the full simplex is void; rejected")
    minimal_nonfaces = minimal_transversal_masks(complements)
    return SimplicialComplex(c.n, tuple(from_mask(full & ~m) for m in minimal_nonfaces))


def complement_complex(c: SimplicialComplex) -> SimplicialComplex:
    full = frozenset(range(1, c.n + 1))
    if full in c.facets:
        raise ValueError("a facet equal to the full vertex set has an empty complement")
    return SimplicialComplex(c.n, tuple(full - f for f in c.facets))


def multiplicity_from_sr(i: SquarefreeIdeal) -> int:
    """Number of top-dimensional facets of the Stanley-Reisner complex."""
    if i.unit or i.is_zero:
        raise ValueError("multiplicity needs a proper nonzero ideal")
    primes = minimal_primes(i)
    return sum(1 for p in primes.primes if len(p) == primes.height)


def parse_complex(text: str) -> SimplicialComplex:
    n = None
    facets = []
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
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            continue
        try:
            f = frozenset(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not all(1 <= v <= n for v in f):
            raise ParseError(f"vertex outside 1..{n} in {line!r}", lineno)
        facets.append(f)
    if n is None:
        raise ParseError("missing header 'n <N>'")
    return SimplicialComplex(n, tuple(facets))


def format_complex(c: SimplicialComplex) -> str:
    lines = [f"n {c.n}"]
    lines.extend(" ".join(map(str, support_key(f))) for f in c.facets)
    return "\n".join(lines) + "\n"


def read_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex(Path(path).read_text())
