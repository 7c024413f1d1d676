"""Squarefree monomial ideals stored as antichains of generator supports."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DEFAULT_ENUMERATION_CAP, DEFAULT_SEARCH_CAP, CapExceeded, ParseError
from .graph import Graph, closed_neighborhood


def support_key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


def to_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def from_mask(m: int) -> frozenset[int]:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def minimalize_masks(masks: Iterable[int]) -> list[int]:
    """Drop every mask that contains another (and duplicates)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        for k in kept:
            if k & m == k:
                break
        else:
            kept.append(m)
    return kept


def minimalize(supports: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    masks = minimalize_masks(to_mask(s) for s in supports)
    return tuple(sorted((from_mask(m) for m in masks), key=support_key))


@dataclass(frozen=True)
class SquarefreeIdeal:
    ambient_n: int
    generators: tuple[frozenset[int], ...] = ()
    unit: bool = False

    def __post_init__(self):
        if self.ambient_n < 1:
            raise ValueError(f"ambient ring needs n >= 1, got {self.ambient_n}")
        gens = [frozenset(g) for g in self.generators]
        for g in gens:
            if not all(1 <= v <= self.ambient_n for v in g):
                raise ValueError(f"generator {sorted(g)} outside 1..{self.ambient_n}")
        unit = self.unit or any(not g for g in gens)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "generators", () if unit else minimalize(gens))

    @classmethod
    def zero(cls, n: int) -> SquarefreeIdeal:
        return cls(n)

    @classmethod
    def unit_ideal(cls, n: int) -> SquarefreeIdeal:
        return cls(n, (), unit=True)

    @property
    def is_zero(self) -> bool:
        return not self.unit and not self.generators

    def masks(self) -> list[int]:
        return [to_mask(g) for g in self.generators]

    def degrees(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for g in self.generators:
            census[len(g)] = census.get(len(g), 0) + 1
        return census

    def contains_support(self, s: Iterable[int]) -> bool:
        """Whether the squarefree monomial on ``s`` lies in the ideal."""
        if self.unit:
            return True
        s = set(s)
        return any(g <= s for g in self.generators)

    def with_ambient(self, n: int) -> SquarefreeIdeal:
        return SquarefreeIdeal(n, self.generators, self.unit)

    def __str__(self) -> str:
        if self.unit:
            return "(1)"
        if not self.generators:
            return "(0)"
        return "(" + ", ".join("".join(f"x{v}" for v in support_key(g)) for g in self.generators) + ")"


def neighborhood_ideal(g: Graph) -> SquarefreeIdeal:
    return SquarefreeIdeal(g.n, tuple(closed_neighborhood(g, v) for v in g.vertices))


_SMALL_NI = {
    3: ((1, 2, 3),),
    4: ((1, 2, 3), (2, 3, 4)),
    5: ((1, 2, 3), (3, 4, 5)),
    6: ((1, 2, 3), (4, 5, 6)),
}


def ni_pn2(n: int) -> SquarefreeIdeal:
    """Closed neighbourhood ideal of the square of the path on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"ni_pn2 needs n >= 3, got {n}")
    if n in _SMALL_NI:
        return SquarefreeIdeal(n, tuple(frozenset(g) for g in _SMALL_NI[n]))
    gens = [frozenset((1, 2, 3)), frozenset((n - 2, n - 1, n))]
    gens.extend(frozenset(range(i, i + 5)) for i in range(2, n - 4))
    return SquarefreeIdeal(n, tuple(gens))


def path_ideal(n: int, t: int, window: tuple[int, int] | None = None) -> SquarefreeIdeal:
    """Ideal of t consecutive variables along the path on ``window`` (default 1..n).

    The result always lives in the full ring on n variables.
    """
    a, b = window if window is not None else (1, n)
    if not 1 <= a <= b <= n:
        raise ValueError(f"window [{a}..{b}] not inside 1..{n}")
    length = b - a + 1
    if not 2 <= t <= length:
        raise ValueError(f"path length t={t} must satisfy 2 <= t <= {length}")
    return SquarefreeIdeal(n, tuple(frozenset(range(i, i + t)) for i in range(a, b - t + 2)))


def add(i: SquarefreeIdeal, j: SquarefreeIdeal) -> SquarefreeIdeal:
    if i.ambient_n != j.ambient_n:
        raise ValueError(f"ambient mismatch: {i.ambient_n} vs {j.ambient_n}")
    if i.unit or j.unit:
        return SquarefreeIdeal.unit_ideal(i.ambient_n)
    return SquarefreeIdeal(i.ambient_n, i.generators + j.generators)


def colon_by_monomial(i: SquarefreeIdeal, u: Iterable[int]) -> SquarefreeIdeal:
    u = frozenset(u)
    if not u:
        raise ValueError("colon needs a nonempty monomial support")
    if not all(1 <= v <= i.ambient_n for v in u):
        raise ValueError(f"support {sorted(u)} outside 1..{i.ambient_n}")
    if i.unit:
        return i
    # an empty difference makes the constructor flag the unit ideal
    return SquarefreeIdeal(i.ambient_n, tuple(g - u for g in i.generators))


@dataclass(frozen=True)
class PrimeList:
    primes: tuple[frozenset[int], ...]
    height: int
    bight: int


def minimal_transversal_masks(edges: Sequence[int], cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    """Berge's algorithm: fold the edges in one at a time, keeping the minimal sets."""
    transversals = [0]
    for e in sorted(edges, key=int.bit_count):
        hit = [t for t in transversals if t & e]
        grown = []
        bits = [1 << v for v in range(e.bit_length()) if e >> v & 1]
        for t in transversals:
            if t & e:
                continue
            grown.extend(t | b for b in bits)
        transversals = minimalize_masks(hit + grown)
        if len(transversals) > cap:
            raise CapExceeded("minimal transversal enumeration", cap, f"{len(transversals)} partial sets")
    return transversals


def minimal_primes(i: SquarefreeIdeal, cap: int = DEFAULT_ENUMERATION_CAP) -> PrimeList:
    if i.is_zero:
        raise ValueError("the zero ideal has no minimal monomial primes to enumerate")
    if i.unit:
        raise ValueError("the unit ideal has no minimal primes")
    masks = minimal_transversal_masks(i.masks(), cap)
    primes = tuple(sorted((from_mask(m) for m in masks), key=support_key))
    sizes = [len(p) for p in primes]
    return PrimeList(primes, min(sizes), max(sizes))


def height(i: SquarefreeIdeal) -> int:
    return minimal_primes(i).height


def bight(i: SquarefreeIdeal) -> int:
    return minimal_primes(i).bight


def alexander_dual_ideal(i: SquarefreeIdeal) -> SquarefreeIdeal:
    return SquarefreeIdeal(i.ambient_n, minimal_primes(i).primes)


def complementary_ideal(c) -> SquarefreeIdeal:
    """Ideal generated by the complements of the facets of ``c``."""
    if not c.facets:
        raise ValueError("complementary ideal of the void complex is undefined")
    full = frozenset(range(1, c.n + 1))
    for f in c.facets:
        if f == full:
            raise ValueError("a facet equal to the full vertex set gives the unit ideal")
    return SquarefreeIdeal(c.n, tuple(full - f for f in c.facets))


def _linear_colon(previous: Iterable[frozenset[int]], g: frozenset[int]) -> bool:
    diffs = minimalize(p - g for p in previous)
    return all(len(d) == 1 for d in diffs)


def check_linear_quotients(i: SquarefreeIdeal, order: Sequence[Iterable[int]]) -> bool:
    order = [frozenset(g) for g in order]
    if sorted(order, key=support_key) != list(i.generators):
        raise ValueError("order must be a permutation of the minimal generators")
    return all(_linear_colon(order[:k], order[k]) for k in range(1, len(order)))


def find_linear_quotients_order(
    i: SquarefreeIdeal, cap: int = DEFAULT_SEARCH_CAP
) -> tuple[frozenset[int], ...] | None:
    """Backtracking search for a linear-quotients order; None means none exists."""
    if i.is_zero or i.unit:
        raise ValueError("linear quotients need a proper nonzero ideal")
    gens = list(i.generators)
    r = len(gens)
    nodes = 0
    chosen: list[int] = []
    used = [False] * r

    def extend() -> bool:
        nonlocal nodes
        if len(chosen) == r:
            return True
        placed = [gens[k] for k in chosen]
        for k in range(r):
            if used[k]:
                continue
            nodes += 1
            if nodes > cap:
                raise CapExceeded("linear quotients search", cap)
            if placed and not _linear_colon(placed, gens[k]):
                continue
            used[k] = True
            chosen.append(k)
            if extend():
                return True
            chosen.pop()
            used[k] = False
        return False

    if extend():
        return tuple(gens[k] for k in chosen)
    return None


def squarefree_component(i: SquarefreeIdeal, d: int) -> SquarefreeIdeal:
    """Squarefree monomials of degree exactly d lying in ``i``."""
    n = i.ambient_n
    if not 1 <= d <= n:
        raise ValueError(f"degree {d} outside 1..{n}")
    if i.unit:
        gens = [frozenset(c) for c in combinations(range(1, n + 1), d)]
        return SquarefreeIdeal(n, tuple(gens))
    masks = i.masks()
    out = []
    for c in combinations(range(1, n + 1), d):
        m = to_mask(c)
        if any(g & m == g for g in masks):
            out.append(frozenset(c))
    return SquarefreeIdeal(n, tuple(out))


def parse_ideal(text: str) -> SquarefreeIdeal:
    n = None
    gens = []
    keyword = None
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
                raise ParseError(f"bad variable count {parts[1]!r}", lineno) from None
            if n < 1:
                raise ParseError("variable count must be positive", lineno)
            continue
        if parts[0] in ("unit", "zero"):
            if len(parts) != 1 or gens or keyword:
                raise ParseError(f"'{parts[0]}' must stand alone on the first body line", lineno)
            keyword = parts[0]
            continue
        if keyword:
            raise ParseError(f"no generators allowed after '{keyword}'", lineno)
        try:
            g = frozenset(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer index in {line!r}", lineno) from None
        if not all(1 <= v <= n for v in g):
            raise ParseError(f"index outside 1..{n} in {line!r}", lineno)
        gens.append(g)
    if n is None:
        raise ParseError("missing header 'n <N>'")
    if keyword == "unit":
        return SquarefreeIdeal.unit_ideal(n)
    return SquarefreeIdeal(n, tuple(gens))


def format_ideal(i: SquarefreeIdeal) -> str:
    lines = [f"n {i.ambient_n}"]
    if i.unit:
        lines.append("unit")
    elif not i.generators:
        lines.append("zero")
    else:
        lines.extend(" ".join(map(str, support_key(g))) for g in i.generators)
    return "\n".join(lines) + "\n"


def read_ideal(path: str | Path) -> SquarefreeIdeal:
    return parse_ideal(Path(path).read_text())


def write_ideal(i: SquarefreeIdeal, path: str | Path) -> None:
    Path(path).write_text(format_ideal(i))
