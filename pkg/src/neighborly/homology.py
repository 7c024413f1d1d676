"""Exact reduced homology ranks of simplicial complexes.

Two independent rank routines live here: a sparse column reduction (used by
the Hochster engine) and dense Bareiss elimination (used by the Koszul
oracle). Both run over Q by default, or over F_p when ``field_char`` is a
prime. No floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import CapExceeded, face_cap
from .simplicial import SimplicialComplex, face_masks


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of reduced homology in degrees -1, 0, ..., dim."""

    ranks: tuple[int, ...]

    def rank(self, k: int) -> int:
        idx = k + 1
        if 0 <= idx < len(self.ranks):
            return self.ranks[idx]
        return 0

    def nonzero(self) -> dict[int, int]:
        return {k - 1: r for k, r in enumerate(self.ranks) if r}

    def euler_poincare(self) -> int:
        return sum((-1) ** (k - 1) * r for k, r in enumerate(self.ranks))


def check_field(field_char: int) -> None:
    if field_char == 0:
        return
    if field_char < 2 or any(field_char % q == 0 for q in range(2, int(field_char**0.5) + 1)):
        raise ValueError(f"field characteristic must be 0 or a prime, got {field_char}")


def _boundary_columns(cols: Sequence[int], row_index: dict[int, int]) -> list[dict[int, int]]:
    out = []
    for m in cols:
        col = {}
        sign = 1
        rest = m
        while rest:
            low = rest & -rest
            col[row_index[m ^ low]] = sign
            sign = -sign
            rest ^= low
        out.append(col)
    return out


def _reduce_columns(
    columns: list[dict[int, int]], skip: set[int], field_char: int
) -> tuple[int, set[int]]:
    """Column reduction; returns (rank, set of pivot rows)."""
    pivots: dict[int, dict[int, int]] = {}
    p = field_char
    for idx, col in enumerate(columns):
        if idx in skip or not col:
            continue
        col = dict(col)
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                break
            a = piv[low]
            b = col[low]
            if p:
                factor = b * pow(a, -1, p) % p
                for r, v in piv.items():
                    nv = (col.get(r, 0) - factor * v) % p
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
            else:
                g = gcd(a, b)
                ca, cb = a // g, b // g
                if ca != 1:
                    for r in col:
                        col[r] *= ca
                for r, v in piv.items():
                    nv = col.get(r, 0) - cb * v
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
                if col:
                    content = 0
                    for v in col.values():
                        content = gcd(content, v)
                        if content == 1:
                            break
                    if content > 1:
                        for r in col:
                            col[r] //= content
        if col:
            pivots[max(col)] = col
    return len(pivots), set(pivots)


def homology_from_faces(masks: Iterable[int], field_char: int = 0) -> HomologyProfile:
    """Reduced homology of the complex whose faces (as bitmasks) are ``masks``.

    The collection must be closed under taking subsets; an empty collection is
    the void complex.
    """
    by_size: dict[int, list[int]] = {}
    for m in masks:
        by_size.setdefault(m.bit_count(), []).append(m)
    if not by_size:
        return HomologyProfile(())
    top = max(by_size)
    levels = [sorted(by_size.get(k, [])) for k in range(top + 1)]
    index = [{m: i for i, m in enumerate(level)} for level in levels]
    ranks = [0] * (top + 2)  # ranks[k] = rank of boundary from size-k faces
    cleared: set[int] = set()
    for k in range(top, 0, -1):
        cols = _boundary_columns(levels[k], index[k - 1])
        ranks[k], pivot_rows = _reduce_columns(cols, cleared, field_char)
        cleared = pivot_rows
    betti = tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))
    return HomologyProfile(betti)


def reduced_homology(c: SimplicialComplex, field_char: int = 0, cap: int | None = None) -> HomologyProfile:
    check_field(field_char)
    cap = face_cap() if cap is None else cap
    masks = face_masks(c, cap)
    return homology_from_faces(masks, field_char)


def bareiss_rank(rows: list[list[int]], field_char: int = 0) -> int:
    """Rank of a dense integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    p = field_char
    if p:
        m = [[v % p for v in r] for r in m]
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        a = pr[c]
        for r in range(rank + 1, len(m)):
            row = m[r]
            b = row[c]
            if p:
                if b:
                    f = b * pow(a, -1, p) % p
                    for j in range(c, ncols):
                        row[j] = (row[j] - f * pr[j]) % p
            else:
                for j in range(c + 1, ncols):
                    row[j] = (a * row[j] - b * pr[j]) // prev
                row[c] = 0
        if not p:
            prev = a
        rank += 1
        if rank == len(m):
            break
    return rank


def homology_bareiss(masks: Iterable[int], field_char: int = 0) -> HomologyProfile:
    """Same contract as homology_from_faces, via dense boundary matrices."""
    by_size: dict[int, list[int]] = {}
    for m in masks:
        by_size.setdefault(m.bit_count(), []).append(m)
    if not by_size:
        return HomologyProfile(())
    top = max(by_size)
    levels = [sorted(by_size.get(k, [])) for k in range(top + 1)]
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        rows_idx = {m: i for i, m in enumerate(levels[k - 1])}
        matrix = [[0] * len(levels[k]) for _ in levels[k - 1]]
        for j, m in enumerate(levels[k]):
            sign = 1
            rest = m
            while rest:
                low = rest & -rest
                matrix[rows_idx[m ^ low]][j] = sign
                sign = -sign
                rest ^= low
        ranks[k] = bareiss_rank(matrix, field_char)
    return HomologyProfile(tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)))


def guard_faces(count: int, cap: int | None = None) -> None:
    cap = face_cap() if cap is None else cap
    if count > cap:
        raise CapExceeded("face count", cap, f"{count} faces")
