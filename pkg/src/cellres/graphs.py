"""Weighted complete bipartite graphs and the vertex labels they induce.

Both kinds of weighting are normalized to a :class:`VertexLabeling`,
which assigns the generator of the edge ideal to each vertex (i, j) of the
Visscher complex.  Indices are 1-based throughout, as in the usual
X1..Xm, Y1..Yn notation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping

from .monomials import Monomial


@dataclass(frozen=True)
class EdgeWeighting:
    m: int
    n: int
    omega: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(tuple(int(w) for w in row) for row in self.omega))
        if self.m < 1 or self.n < 1:
            raise ValueError("K_{m,n} needs m, n >= 1")
        if len(self.omega) != self.m or any(len(row) != self.n for row in self.omega):
            raise ValueError(f"weight matrix is not {self.m}x{self.n}: {self.omega}")
        if any(w < 1 for row in self.omega for w in row):
            raise ValueError(f"edge weights must be positive: {self.omega}")

    @classmethod
    def from_rows(cls, rows) -> "EdgeWeighting":
        rows = tuple(tuple(r) for r in rows)
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    def weight(self, i: int, j: int) -> int:
        return self.omega[i - 1][j - 1]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.omega]


@dataclass(frozen=True)
class VertexWeighting:
    m: int
    n: int
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        object.__setattr__(self, "y", tuple(int(v) for v in self.y))
        if len(self.x) != self.m or len(self.y) != self.n or self.m < 1 or self.n < 1:
            raise ValueError(f"vertex weights do not fit K_({self.m},{self.n})")
        if any(v < 1 for v in self.x + self.y):
            raise ValueError("vertex weights must be positive")


@dataclass(frozen=True)
class VertexLabeling:
    m: int
    n: int
    labels: tuple[tuple[Monomial, ...], ...]

    def __post_init__(self):
        if len(self.labels) != self.m or any(len(r) != self.n for r in self.labels):
            raise ValueError("label grid does not match (m, n)")
        for i, row in enumerate(self.labels, start=1):
            for j, f in enumerate(row, start=1):
                if f.ambient != (self.m, self.n):
                    raise ValueError(f"label at ({i},{j}) lives in the wrong ring")
                if f.is_one():
                    raise ValueError(f"label at ({i},{j}) is the unit")
                if not set(f.support()) <= {("X", i), ("Y", j)}:
                    raise ValueError(f"label {f} at ({i},{j}) uses foreign variables")

    def label(self, i: int, j: int) -> Monomial:
        return self.labels[i - 1][j - 1]

    def __getitem__(self, ij: tuple[int, int]) -> Monomial:
        return self.label(*ij)

    def vertices(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.m + 1):
            for j in range(1, self.n + 1):
                yield (i, j)

    def generators(self) -> list[Monomial]:
        """Labels in vertex order (1,1), (1,2), ..., (m,n)."""
        return [self.label(i, j) for i, j in self.vertices()]

    def delete(self, side: str, index: int) -> "VertexLabeling":
        """Drop a row (side X) or column (side Y) and the matching variable."""
        if side == "X":
            if self.m < 2:
                raise ValueError("cannot delete the last X vertex")
            keep_x = [i for i in range(1, self.m + 1) if i != index]
            return VertexLabeling(self.m - 1, self.n, tuple(
                tuple(_drop_var(self.label(i, j), index - 1) for j in range(1, self.n + 1))
                for i in keep_x))
        if side == "Y":
            if self.n < 2:
                raise ValueError("cannot delete the last Y vertex")
            keep_y = [j for j in range(1, self.n + 1) if j != index]
            return VertexLabeling(self.m, self.n - 1, tuple(
                tuple(_drop_var(self.label(i, j), self.m + index - 1, y_side=True) for j in keep_y)
                for i in range(1, self.m + 1)))
        raise ValueError(f"side must be 'X' or 'Y', not {side!r}")


def _drop_var(f: Monomial, position: int, y_side: bool = False) -> Monomial:
    exps = f.exponents[:position] + f.exponents[position + 1:]
    if y_side:
        return Monomial(exps, f.m, f.n - 1)
    return Monomial(exps, f.m - 1, f.n)


def edge_weight_labels(w: EdgeWeighting) -> VertexLabeling:
    """Vertex (i, j) gets ``(Xi*Yj)^omega(XiYj)``."""
    return VertexLabeling(w.m, w.n, tuple(
        tuple(
            Monomial.var("X", i, w.m, w.n, w.weight(i, j)) * Monomial.var("Y", j, w.m, w.n, w.weight(i, j))
            for j in range(1, w.n + 1))
        for i in range(1, w.m + 1)))


def vertex_weight_labels(v: VertexWeighting) -> VertexLabeling:
    """Vertex (i, j) gets ``Xi^lambda(Xi) * Yj^lambda(Yj)``."""
    return VertexLabeling(v.m, v.n, tuple(
        tuple(
            Monomial.var("X", i, v.m, v.n, v.x[i - 1]) * Monomial.var("Y", j, v.m, v.n, v.y[j - 1])
            for j in range(1, v.n + 1))
        for i in range(1, v.m + 1)))


def delete_vertex(w: EdgeWeighting, side: str, index: int) -> EdgeWeighting:
    """Remove vertex ``side``+``index`` of K_{m,n}; later indices shift down by one."""
    if side == "X":
        if w.m < 2:
            raise ValueError("cannot delete the last X vertex")
        if not 1 <= index <= w.m:
            raise IndexError(f"no vertex X{index}")
        return EdgeWeighting(w.m - 1, w.n, w.omega[: index - 1] + w.omega[index:])
    if side == "Y":
        if w.n < 2:
            raise ValueError("cannot delete the last Y vertex")
        if not 1 <= index <= w.n:
            raise IndexError(f"no vertex Y{index}")
        return EdgeWeighting(w.m, w.n - 1, tuple(row[: index - 1] + row[index:] for row in w.omega))
    raise ValueError(f"side must be 'X' or 'Y', not {side!r}")


def min_weight(w: EdgeWeighting) -> int:
    return min(min(row) for row in w.omega)


def labels_of(weighting: EdgeWeighting | VertexWeighting) -> VertexLabeling:
    if isinstance(weighting, EdgeWeighting):
        return edge_weight_labels(weighting)
    return vertex_weight_labels(weighting)


def weighting_from_dict(data: Mapping) -> EdgeWeighting | VertexWeighting:
    """Parse ``{"m":2,"n":2,"edge_weights":[[2,3],[3,2]]}`` or the
    ``vertex_weights`` form ``{"x": [...], "y": [...]}``."""
    if not isinstance(data, Mapping):
        raise ValueError("graph description must be a JSON object")
    has_edge = "edge_weights" in data
    has_vertex = "vertex_weights" in data
    if has_edge == has_vertex:
        raise ValueError("exactly one of 'edge_weights' and 'vertex_weights' is required")
    try:
        if has_edge:
            rows = data["edge_weights"]
            m = int(data.get("m", len(rows)))
            n = int(data.get("n", len(rows[0]) if rows else 0))
            return EdgeWeighting(m, n, tuple(tuple(r) for r in rows))
        vw = data["vertex_weights"]
        x, y = vw["x"], vw["y"]
        m = int(data.get("m", len(x)))
        n = int(data.get("n", len(y)))
        return VertexWeighting(m, n, tuple(x), tuple(y))
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed graph description: {exc}") from exc


def weighting_from_json(text: str) -> EdgeWeighting | VertexWeighting:
    return weighting_from_dict(json.loads(text))


def weighting_to_dict(weighting: EdgeWeighting | VertexWeighting) -> dict:
    if isinstance(weighting, EdgeWeighting):
        return {"m": weighting.m, "n": weighting.n, "edge_weights": weighting.rows()}
    return {"m": weighting.m, "n": weighting.n,
            "vertex_weights": {"x": list(weighting.x), "y": list(weighting.y)}}
