"""Exact homology via integer Smith normal form.

Ranks over a field of characteristic ``p`` are read off the invariant
factors: an invariant survives mod p unless p divides it.  Characteristic 0
counts every nonzero invariant.  Invariant factors bigger than 1 are
integral torsion and are always reported, whatever the characteristic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .chains import FreeChainComplex
from .monomials import Monomial, divides, quotient


class EmptyComplexError(ValueError):
    """Homology of the empty complex is left to the caller (empty or acyclic)."""


# -- Smith normal form ---------------------------------------------------------

def _sparse_rows(matrix) -> list[dict[int, int]]:
    if isinstance(matrix, dict):
        rows: dict[int, dict[int, int]] = {}
        for (r, c), v in matrix.items():
            if v:
                rows.setdefault(r, {})[c] = v
        return [row for _, row in sorted(rows.items())]
    return [{c: v for c, v in enumerate(row) if v} for row in matrix]


def _reduce_unit_pivots(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Eliminate on ±1 pivots until none are left.

    A unit pivot splits the matrix as 1 ⊕ M' after unimodular row and column
    operations, so each one contributes a trivial invariant factor.
    """
    units = 0
    rows = [dict(r) for r in rows if r]
    while True:
        pivot = None
        for ri, row in enumerate(rows):
            for c, v in row.items():
                if v == 1 or v == -1:
                    pivot = (ri, c, v)
                    break
            if pivot:
                break
        if pivot is None:
            return units, rows
        ri, pc, pv = pivot
        prow = rows.pop(ri)
        new_rows = []
        for row in rows:
            a = row.get(pc)
            if a:
                q = a * pv  # pv is its own inverse
                for c, v in prow.items():
                    nv = row.get(c, 0) - q * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            # the pivot column is now zero here; dropping the pivot row is the column clearing
            if row:
                new_rows.append(row)
        rows = new_rows
        units += 1


def _dense_diagonalize(rows: list[dict[int, int]]) -> list[int]:
    """Diagonalize a small integer matrix with gcd moves; returns |diagonal| (nonzero)."""
    cols = sorted({c for r in rows for c in r})
    cidx = {c: k for k, c in enumerate(cols)}
    A = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            A[i][cidx[c]] = v
    m, n = len(A), len(cols)
    diag = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                break
            # a remainder is smaller than the pivot; bring it to (t, t)
            best = None
            for i in range(t, m):
                if A[i][t] and (best is None or abs(A[i][t]) < abs(best[2])):
                    best = ("r", i, A[i][t])
            for j in range(t, n):
                if A[t][j] and (best is None or abs(A[t][j]) < abs(best[2])):
                    best = ("c", j, A[t][j])
            kind, k, _ = best
            if kind == "r":
                A[t], A[k] = A[k], A[t]
            else:
                for row in A:
                    row[t], row[k] = row[k], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _to_invariant_factors(diag: list[int]) -> list[int]:
    d = sorted(x for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if g != d[i]:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def smith_invariants(matrix) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    ``matrix`` is a list of rows or a ``{(r, c): value}`` dict.
    """
    units, rest = _reduce_unit_pivots(_sparse_rows(matrix))
    if not rest:
        return [1] * units
    return [1] * units + _to_invariant_factors(_dense_diagonalize(rest))


def smith_normal_form(matrix, nrows: int, ncols: int) -> list[list[int]]:
    """The full Smith normal form as a dense matrix."""
    inv = smith_invariants(matrix)
    out = [[0] * ncols for _ in range(nrows)]
    for k, v in enumerate(inv):
        out[k][k] = v
    return out


def rank_from_invariants(invariants: Iterable[int], characteristic: int = 0) -> int:
    if characteristic == 0:
        return sum(1 for v in invariants if v)
    return sum(1 for v in invariants if v % characteristic)


# -- homology of integer chain complexes -----------------------------------------

@dataclass
class HomologyProfile:
    """Homology ranks in degrees ``offset, offset+1, ...`` plus integral torsion."""
    betti: list[int]
    offset: int = 0
    torsion: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)
    characteristic: int = 0

    def rank(self, degree: int) -> int:
        k = degree - self.offset
        return self.betti[k] if 0 <= k < len(self.betti) else 0

    def is_acyclic(self) -> bool:
        return not any(self.betti)

    def nonzero(self) -> dict[int, int]:
        return {self.offset + k: b for k, b in enumerate(self.betti) if b}

    def shifted(self, by: int) -> "HomologyProfile":
        return HomologyProfile(list(self.betti), self.offset + by,
                               [(d + by, inv) for d, inv in self.torsion], self.characteristic)

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "offset": self.offset,
                "torsion": [[d, list(inv)] for d, inv in self.torsion],
                "characteristic": self.characteristic}


def check_characteristic(p: int) -> int:
    p = int(p)
    if p == 0:
        return 0
    if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or a prime, not {p}")
    return p


def chain_homology(dims: Sequence[int], boundaries: dict[int, object], offset: int = 0,
                   characteristic: int = 0) -> HomologyProfile:
    """Homology of ``C_lo <- ... <- C_hi`` with ``dims[k]`` = rank in degree offset+k.

    ``boundaries[k]`` is the matrix of C_{offset+k} -> C_{offset+k-1}
    (rows for the lower degree).  Missing entries are zero maps.
    """
    characteristic = check_characteristic(characteristic)
    invariants = {k: smith_invariants(boundaries[k]) for k in boundaries}
    return _profile(dims, invariants, offset, characteristic)


def _profile(dims, invariants, offset, characteristic) -> HomologyProfile:
    ranks = {k: rank_from_invariants(v, characteristic) for k, v in invariants.items()}
    betti = [dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(len(dims))]
    torsion = []
    for k in sorted(invariants):
        tors = tuple(v for v in invariants[k] if v > 1)
        if tors:
            torsion.append((offset + k - 1, tors))
    return HomologyProfile(betti, offset, torsion, characteristic)


@lru_cache(maxsize=1 << 16)
def _cell_invariants(cells: frozenset) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Ranks and boundary invariants of the augmented cellular chain complex.

    Index 0 is the empty cell (dimension -1); index k holds cells of
    dimension k-1.
    """
    top = max(c.degree for c in cells)
    by_degree: list[list] = [[None]] + [[] for _ in range(top)]
    for c in cells:
        by_degree[c.degree].append(c)
    for group in by_degree[1:]:
        group.sort(key=lambda c: c.sort_key())
    index = [{c: i for i, c in enumerate(g)} for g in by_degree]
    invariants = []
    for k in range(1, top + 1):
        entries = {}
        for col, cell in enumerate(by_degree[k]):
            if k == 1:
                entries[(0, col)] = 1
                continue
            for sub, sign, _ in cell.boundary():
                entries[(index[k - 1][sub], col)] = sign
        invariants.append(tuple(smith_invariants(entries)))
    return tuple(len(g) for g in by_degree), tuple(invariants)


def reduced_homology(C, characteristic: int = 0) -> HomologyProfile:
    """Reduced cellular homology H~_i, i = -1 .. dim C, of a nonempty cell complex.

    ``C`` is anything with a ``cells`` collection (labels are ignored).
    """
    cells = frozenset(C.cells if hasattr(C, "cells") else C)
    if not cells:
        raise EmptyComplexError("reduced homology of the empty complex is not computed here")
    characteristic = check_characteristic(characteristic)
    dims, inv = _cell_invariants(cells)
    return _profile(list(dims), {k: list(v) for k, v in enumerate(inv, start=1)}, -1, characteristic)


def is_acyclic(C, characteristic: int = 0) -> bool:
    return reduced_homology(C, characteristic).is_acyclic()


# -- multigraded strands -------------------------------------------------------

@dataclass
class Strand:
    """The degree-``f`` slice of a multigraded free complex: a complex of k-vector spaces."""
    f: Monomial
    bases: list[list]
    matrices: dict[int, dict[tuple[int, int], int]]

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def homology(self, characteristic: int = 0) -> HomologyProfile:
        return chain_homology(self.dims(), self.matrices, 0, characteristic)


def strand(F: FreeChainComplex, f: Monomial) -> Strand:
    """Keep basis elements whose multidegree divides ``f``; each entry becomes
    the scalar coefficient of its (unique) monomial."""
    keep = [[k for k, g in enumerate(F.mdegs[d]) if divides(g, f)] for d in range(F.top + 1)]
    bases = [[F.bases[d][k] for k in keep[d]] for d in range(F.top + 1)]
    matrices = {}
    for d in range(1, F.top + 1):
        rpos = {k: i for i, k in enumerate(keep[d - 1])}
        cpos = {k: i for i, k in enumerate(keep[d])}
        entries = {}
        for (r, c), v in F.diff(d).entries.items():
            if r in rpos and c in cpos:
                want = quotient(F.mdegs[d][c], F.mdegs[d - 1][r])
                coeff = v.terms.get(want, 0)
                if coeff:
                    entries[(rpos[r], cpos[c])] = coeff
        matrices[d] = entries
    return Strand(f, bases, matrices)


def tor_ranks(F: FreeChainComplex, characteristic: int = 0) -> list[int]:
    """Homology of F ⊗ k (all variables set to zero).

    When F resolves S/I these are the graded Betti numbers summed over
    multidegrees, whether or not F is minimal.
    """
    matrices = {}
    for d in range(1, F.top + 1):
        entries = {}
        for (r, c), v in F.diff(d).entries.items():
            const = sum(coeff for mono, coeff in v.items() if mono.is_one())
            if const:
                entries[(r, c)] = const
        matrices[d] = entries
    return chain_homology(F.ranks(), matrices, 0, characteristic).betti
