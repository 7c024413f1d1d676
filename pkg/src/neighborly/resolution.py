"""Graded Betti numbers of S/I for squarefree I, and what they determine."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import CapExceeded
from .homology import check_field, homology_bareiss, homology_from_faces
from .ideal import (
    SquarefreeIdeal,
    alexander_dual_ideal,
    from_mask,
    minimal_primes,
    squarefree_component,
    support_key,
)
from .simplicial import face_masks, stanley_reisner_complex

DEFAULT_MAX_AMBIENT = 16
ORACLE_MAX_AMBIENT = 12
SEQCM_MAX_AMBIENT = 10
DEFAULT_LATTICE_CAP = 1 << 16


@dataclass
class BettiTable:
    ambient_n: int
    entries: dict[tuple[int, int], int]
    multigraded: dict[tuple[int, frozenset[int]], int] = field(default_factory=dict)
    field_char: int = 0

    @classmethod
    def from_multigraded(
        cls, n: int, multigraded: dict[tuple[int, frozenset[int]], int], field_char: int = 0
    ) -> BettiTable:
        entries: dict[tuple[int, int], int] = {}
        for (i, sigma), b in multigraded.items():
            if b:
                entries[(i, len(sigma))] = entries.get((i, len(sigma)), 0) + b
        mg = {k: v for k, v in multigraded.items() if v}
        return cls(n, entries, mg, field_char)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def sorted_entries(self) -> list[tuple[int, int, int]]:
        return [(i, j, b) for (i, j), b in sorted(self.entries.items())]

    def to_json(self, multigraded: bool = False) -> dict:
        doc: dict = {"char": self.field_char, "entries": [list(e) for e in self.sorted_entries()]}
        if multigraded:
            doc["multigraded"] = [
                [i, list(support_key(s)), b]
                for (i, s), b in sorted(self.multigraded.items(), key=lambda kv: (kv[0][0], support_key(kv[0][1])))
            ]
        return doc

    def dumps(self, multigraded: bool = False) -> str:
        return json.dumps(self.to_json(multigraded), sort_keys=True)

    @classmethod
    def from_json(cls, doc: dict, ambient_n: int) -> BettiTable:
        entries = {(int(i), int(j)): int(b) for i, j, b in doc["entries"]}
        mg = {(int(i), frozenset(s)): int(b) for i, s, b in doc.get("multigraded", [])}
        return cls(ambient_n, entries, mg, int(doc["char"]))

    def render(self) -> str:
        """Macaulay2-style table: row r holds beta_{i, i+r}."""
        pd, reg = self.pd, self.reg
        width = max(len(str(b)) for b in self.entries.values()) + 1
        lines = ["     " + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        for r in range(reg + 1):
            cells = []
            for i in range(pd + 1):
                b = self.get(i, i + r)
                cells.append(f"{b if b else '.':>{width}}")
            lines.append(f"{r:>3}: " + "".join(cells))
        return "\n".join(lines)


def _check_proper(i: SquarefreeIdeal, max_ambient: int, what: str) -> None:
    if i.unit or i.is_zero:
        raise ValueError(f"{what} needs a proper nonzero ideal")
    if i.ambient_n > max_ambient:
        raise CapExceeded(f"{what} ambient size", max_ambient, f"n={i.ambient_n}")


def lcm_lattice(i: SquarefreeIdeal, cap: int = DEFAULT_LATTICE_CAP) -> list[int]:
    """Unions of subsets of generator supports, as masks (empty set included)."""
    lattice = {0}
    for g in i.masks():
        lattice |= {x | g for x in lattice}
        if len(lattice) > cap:
            raise CapExceeded("lcm lattice", cap, f"reached {len(lattice)} elements")
    return sorted(lattice, key=lambda m: (m.bit_count(), m))


def betti_hochster(
    i: SquarefreeIdeal,
    field_char: int = 0,
    max_ambient: int = DEFAULT_MAX_AMBIENT,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> BettiTable:
    """beta_{i,sigma}(S/I) = rank H~_{|sigma|-i-1}(SR(I) restricted to sigma), sigma in the lcm lattice."""
    check_field(field_char)
    _check_proper(i, max_ambient, "Hochster engine")
    faces = sorted(face_masks(stanley_reisner_complex(i)))
    mg: dict[tuple[int, frozenset[int]], int] = {}
    for sigma in lcm_lattice(i, lattice_cap):
        size = sigma.bit_count()
        if sigma == 0:
            mg[(0, frozenset())] = 1
            continue
        restricted = [f for f in faces if f & sigma == f]
        homology = homology_from_faces(restricted, field_char)
        support = from_mask(sigma)
        for k, r in homology.nonzero().items():
            mg[(size - k - 1, support)] = r
    return BettiTable.from_multigraded(i.ambient_n, mg, field_char)


def upper_koszul_faces(gens: list[int], sigma: int) -> list[int]:
    """Faces tau of sigma such that sigma minus tau still contains a generator."""
    inside = [g for g in gens if g & sigma == g]
    faces = []
    tau = sigma
    while True:
        rest = sigma & ~tau
        if any(g & rest == g for g in inside):
            faces.append(tau)
        if tau == 0:
            break
        tau = (tau - 1) & sigma
    return faces


def betti_koszul_oracle(
    i: SquarefreeIdeal, field_char: int = 0, max_ambient: int = ORACLE_MAX_AMBIENT
) -> BettiTable:
    """Brute force over every squarefree degree: beta_{i+1,sigma}(S/I) = rank H~_{i-1}(K^sigma)."""
    check_field(field_char)
    _check_proper(i, max_ambient, "Koszul oracle")
    gens = i.masks()
    mg: dict[tuple[int, frozenset[int]], int] = {(0, frozenset()): 1}
    for sigma in range(1 << (i.ambient_n + 1)):
        if sigma & 1:
            continue  # vertices are 1-based, bit 0 unused
        homology = homology_bareiss(upper_koszul_faces(gens, sigma), field_char)
        support = from_mask(sigma)
        for k, r in homology.nonzero().items():
            mg[(k + 2, support)] = r
    return BettiTable.from_multigraded(i.ambient_n, mg, field_char)


class Invariants(NamedTuple):
    pd: int
    reg: int
    depth: int
    dim: int


def pd_reg_depth(b: BettiTable, i: SquarefreeIdeal) -> Invariants:
    if b.ambient_n != i.ambient_n:
        raise ValueError(f"ambient mismatch: table {b.ambient_n}, ideal {i.ambient_n}")
    pd = b.pd
    return Invariants(pd, b.reg, i.ambient_n - pd, i.ambient_n - minimal_primes(i).height)


def is_cohen_macaulay(i: SquarefreeIdeal, field_char: int = 0, max_ambient: int = DEFAULT_MAX_AMBIENT) -> bool:
    """depth == dim, i.e. pd == height."""
    b = betti_hochster(i, field_char, max_ambient)
    return b.pd == minimal_primes(i).height


def has_linear_resolution(i: SquarefreeIdeal, field_char: int = 0, max_ambient: int = DEFAULT_MAX_AMBIENT) -> bool:
    degrees = {len(g) for g in i.generators}
    if len(degrees) != 1:
        return False
    (d,) = degrees
    return betti_hochster(i, field_char, max_ambient).reg == d - 1


def is_sequentially_cm(
    i: SquarefreeIdeal, field_char: int = 0, max_ambient: int = SEQCM_MAX_AMBIENT
) -> bool | None:
    """Herzog-Hibi: S/I is sequentially CM iff the Alexander dual is componentwise linear.

    Returns None (indeterminate) when a cap is hit; never False for that reason.
    """
    if i.unit or i.is_zero:
        raise ValueError("sequential CM check needs a proper nonzero ideal")
    if i.ambient_n > max_ambient:
        return None
    try:
        dual = alexander_dual_ideal(i)
        low = min(len(g) for g in dual.generators)
        for d in range(low, i.ambient_n + 1):
            component = squarefree_component(dual, d)
            if component.is_zero:
                continue
            if not has_linear_resolution(component, field_char, max_ambient):
                return False
    except CapExceeded:
        return None
    return True


class BightPd(NamedTuple):
    bight: int
    pd: int
    equal: bool


def bight_vs_pd(i: SquarefreeIdeal, field_char: int = 0, max_ambient: int = DEFAULT_MAX_AMBIENT) -> BightPd:
    bight = minimal_primes(i).bight
    pd = betti_hochster(i, field_char, max_ambient).pd
    return BightPd(bight, pd, bight == pd)


def random_squarefree_ideal(rng, ambient_n: int, max_generators: int = 6) -> SquarefreeIdeal:
    """A random proper nonzero squarefree ideal, already minimalized."""
    vertices = range(1, ambient_n + 1)
    gens = []
    for _ in range(rng.randint(1, max_generators)):
        size = rng.randint(1, ambient_n)
        gens.append(frozenset(rng.sample(vertices, size)))
    return SquarefreeIdeal(ambient_n, tuple(gens))
