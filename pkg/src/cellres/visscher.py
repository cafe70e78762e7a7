"""Visscher's cell complex V_{m,n}, simplices, and their monomial labels.

A face of V_{m,n} is a pair (A, B) of nonempty subsets of [m] and [n]; it
has dimension |A|+|B|-2 and sits in homological degree |A|+|B|-1 of the
cellular chain complex.  Simplices use the same interface so the chain
complex builder does not care which kind of cell it is handed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence, Union

from .graphs import VertexLabeling
from .monomials import Monomial, divides, lcm_all


def _subset_str(s: Sequence[int]) -> str:
    if all(k <= 9 for k in s):
        return "".join(str(k) for k in s)
    return ",".join(str(k) for k in s)


@dataclass(frozen=True)
class Face:
    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(sorted(set(self.A))))
        object.__setattr__(self, "B", tuple(sorted(set(self.B))))
        if not self.A or not self.B:
            raise ValueError("both index sets of a face must be nonempty")

    @property
    def dim(self) -> int:
        return len(self.A) + len(self.B) - 2

    @property
    def degree(self) -> int:
        return len(self.A) + len(self.B) - 1

    def vertices(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.A for b in self.B]

    def is_face_of(self, other: "Face") -> bool:
        return set(self.A) <= set(other.A) and set(self.B) <= set(other.B)

    def boundary(self) -> list[tuple["Face", int, int]]:
        """Codimension-one faces as ``(face, sign, position)``.

        Removing ``a_i`` carries ``(-1)^(i-1)`` and removing ``b_j`` carries
        ``(-1)^(s+j-1)`` with ``s = |A|``; ``position`` counts through
        a_1..a_s, b_1..b_t from zero.  Removals that would empty A or B are
        not faces and are skipped.
        """
        s = len(self.A)
        out = []
        if s >= 2:
            for i, a in enumerate(self.A, start=1):
                rest = tuple(x for x in self.A if x != a)
                out.append((Face(rest, self.B), (-1) ** (i - 1), i - 1))
        if len(self.B) >= 2:
            for j, b in enumerate(self.B, start=1):
                rest = tuple(y for y in self.B if y != b)
                out.append((Face(self.A, rest), (-1) ** (s + j - 1), s + j - 1))
        return out

    def sort_key(self) -> tuple:
        return (self.degree, len(self.A), self.A, len(self.B), self.B)

    def __str__(self) -> str:
        return f"[{_subset_str(self.A)},{_subset_str(self.B)}]"


@dataclass(frozen=True)
class Simplex:
    """A face of the full simplex on vertices 1..s, given by its vertex set.

    Removing the vertex in (1-based) position p carries the sign (-1)^p,
    the same convention V_{1,n} uses, so that V_{1,n} and the simplex on its
    generators produce identical matrices.  ``standard=True`` switches to
    the textbook (-1)^(p-1).
    """

    V: tuple[int, ...]
    standard: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "V", tuple(sorted(set(self.V))))
        if not self.V:
            raise ValueError("a simplex face needs at least one vertex")

    @property
    def dim(self) -> int:
        return len(self.V) - 1

    @property
    def degree(self) -> int:
        return len(self.V)

    def vertices(self) -> list[tuple[int]]:
        return [(v,) for v in self.V]

    def is_face_of(self, other: "Simplex") -> bool:
        return set(self.V) <= set(other.V)

    def boundary(self) -> list[tuple["Simplex", int, int]]:
        if len(self.V) < 2:
            return []
        shift = 1 if self.standard else 0
        return [(Simplex(self.V[:p - 1] + self.V[p:], self.standard), (-1) ** (p - shift), p - 1)
                for p in range(1, len(self.V) + 1)]

    def sort_key(self) -> tuple:
        return (self.degree, self.V)

    def __str__(self) -> str:
        return f"[{_subset_str(self.V)}]"


Cell = Union[Face, Simplex]


def enumerate_faces(m: int, n: int, degree: int) -> list[Face]:
    """All faces (A, B) of V_{m,n} with |A| + |B| = degree + 1, in basis order."""
    if degree < 1:
        return []
    faces = []
    for s in range(1, m + 1):
        t = degree + 1 - s
        if not 1 <= t <= n:
            continue
        for A in combinations(range(1, m + 1), s):
            for B in combinations(range(1, n + 1), t):
                faces.append(Face(A, B))
    return faces


def all_faces(m: int, n: int) -> list[Face]:
    return [f for d in range(1, m + n) for f in enumerate_faces(m, n, d)]


def boundary(cell: Cell) -> list[tuple[Cell, int, int]]:
    return cell.boundary()


class LabeledComplex:
    """A face-closed set of cells with lcm labels.

    ``vertex_labels`` maps each vertex key (``(i, j)`` for Visscher cells,
    ``(k,)`` for simplices) to its generator.  Labels of higher cells are
    the lcm over their vertices and are computed lazily.
    """

    def __init__(self, cells: Iterable[Cell], vertex_labels: dict, ambient: tuple[int, int],
                 check: bool = True):
        self.cells = frozenset(cells)
        self.vertex_labels = dict(vertex_labels)
        self.ambient = ambient
        self._labels: dict[Cell, Monomial] = {}
        if check:
            for cell in self.cells:
                for sub, _, _ in cell.boundary():
                    if sub not in self.cells:
                        raise ValueError(f"{sub} is missing from the complex (face of {cell})")

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def is_empty(self) -> bool:
        return not self.cells

    def label(self, cell: Cell) -> Monomial:
        lab = self._labels.get(cell)
        if lab is None:
            lab = lcm_all(self.vertex_labels[v] for v in cell.vertices())
            self._labels[cell] = lab
        return lab

    @cached_property
    def top_degree(self) -> int:
        return max((c.degree for c in self.cells), default=0)

    def cells_in_degree(self, degree: int) -> list[Cell]:
        return sorted((c for c in self.cells if c.degree == degree), key=lambda c: c.sort_key())

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells, key=lambda c: c.sort_key())

    def vertices(self) -> list[Cell]:
        return self.cells_in_degree(1)

    def restrict(self, f: Monomial) -> "LabeledComplex":
        """The subcomplex of cells whose label divides ``f``."""
        keep = [c for c in self.cells if divides(self.label(c), f)]
        sub = LabeledComplex(keep, self.vertex_labels, self.ambient, check=False)
        sub._labels = {c: self._labels[c] for c in keep if c in self._labels}
        return sub

    def __repr__(self) -> str:
        return f"LabeledComplex({len(self.cells)} cells, ambient={self.ambient})"


def visscher_complex(labeling: VertexLabeling) -> LabeledComplex:
    """V_{m,n} with vertex (i, j) labeled by ``labeling[i, j]``."""
    return LabeledComplex(all_faces(labeling.m, labeling.n),
                          {v: labeling.label(*v) for v in labeling.vertices()},
                          (labeling.m, labeling.n), check=False)


def simplex(labels: Sequence[Monomial], standard: bool = False) -> LabeledComplex:
    """The full simplex on ``len(labels)`` vertices, vertex k labeled ``labels[k-1]``."""
    labels = list(labels)
    if not labels:
        raise ValueError("a simplex needs at least one label")
    s = len(labels)
    cells = [Simplex(c, standard) for r in range(1, s + 1) for c in combinations(range(1, s + 1), r)]
    return LabeledComplex(cells, {(k,): f for k, f in enumerate(labels, start=1)},
                          labels[0].ambient, check=False)


def label_of(face: Face, labeling: VertexLabeling) -> Monomial:
    return lcm_all(labeling.label(i, j) for i, j in face.vertices())
