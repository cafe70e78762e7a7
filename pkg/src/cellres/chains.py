"""Free chain complexes over S with monomial matrix differentials.

Matrices are sparse: only nonzero entries are stored, each a
:class:`MonomialSum`.  Complexes built from labeled cell complexes have
single-term entries; multi-term sums only show up in products formed while
verifying identities such as d∘d = 0 or chain-map commutativity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .graphs import EdgeWeighting, VertexLabeling, delete_vertex, edge_weight_labels, min_weight
from .monomials import Monomial, MonomialSum, divides, quotient
from .visscher import Face, LabeledComplex, Simplex, simplex, visscher_complex

EMPTY = "[]"  # basis tag of the empty cell, the generator of F_0 = S


class MonomialMatrix:
    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], MonomialSum] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r},{c}) outside {nrows}x{ncols}")
            if not v.is_zero():
                self.entries[(r, c)] = v

    @classmethod
    def identity(cls, size: int, one: Monomial) -> "MonomialMatrix":
        return cls(size, size, {(k, k): MonomialSum.term(1, one) for k in range(size)})

    def __getitem__(self, rc: tuple[int, int]) -> MonomialSum:
        return self.entries.get(rc, _ZERO)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not self.entries

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, MonomialSum]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], list] = {}
        for (i, j), a in self.entries.items():
            for k, b in by_row.get(j, ()):
                acc.setdefault((i, k), []).append(a.times(b))
        out = {}
        for key, parts in acc.items():
            total = MonomialSum()
            for p in parts:
                total = total.add(p)
            out[key] = total
        return MonomialMatrix(self.nrows, other.ncols, out)

    def __neg__(self) -> "MonomialMatrix":
        return MonomialMatrix(self.nrows, self.ncols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, _ZERO) - v
        return MonomialMatrix(self.nrows, self.ncols, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def map_monomials(self, fn: Callable[[Monomial], Monomial]) -> "MonomialMatrix":
        return MonomialMatrix(self.nrows, self.ncols,
                              {k: v.map_monomials(fn) for k, v in self.entries.items()})

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "MonomialMatrix":
        """Entry (r, c) of the result is entry (row_order[r], col_order[c]) of self."""
        rinv = {old: new for new, old in enumerate(row_order)}
        cinv = {old: new for new, old in enumerate(col_order)}
        return MonomialMatrix(len(row_order), len(col_order),
                              {(rinv[r], cinv[c]): v for (r, c), v in self.entries.items()})

    def to_rows(self) -> list[list[MonomialSum]]:
        return [[self[r, c] for c in range(self.ncols)] for r in range(self.nrows)]

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.to_rows()]

    def __repr__(self) -> str:
        return f"MonomialMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"


_ZERO = MonomialSum()


class FreeChainComplex:
    """Free S-modules in degrees 0..top with tagged, multigraded bases.

    ``diffs[d]`` maps degree d to degree d-1, rows indexed by
    ``bases[d-1]`` and columns by ``bases[d]``.  ``mdegs`` holds the
    multidegree (label) of each basis element.  ``augmented`` marks
    complexes whose degree-0 module is S itself on the empty cell.
    """

    def __init__(self, ambient: tuple[int, int], bases: Sequence[Sequence[Hashable]],
                 mdegs: Sequence[Sequence[Monomial]], diffs: dict[int, MonomialMatrix],
                 augmented: bool = False):
        self.ambient = tuple(ambient)
        self.bases = [list(b) for b in bases]
        self.mdegs = [list(g) for g in mdegs]
        self.augmented = augmented
        self._index = [{t: k for k, t in enumerate(b)} for b in self.bases]
        for d, b in enumerate(self.bases):
            if len(self._index[d]) != len(b):
                raise ValueError(f"duplicate basis tags in degree {d}")
            if len(self.mdegs[d]) != len(b):
                raise ValueError(f"multidegree count mismatch in degree {d}")
        self.diffs = {}
        for d in range(1, len(self.bases)):
            mat = diffs.get(d) or MonomialMatrix(len(self.bases[d - 1]), len(self.bases[d]))
            if mat.shape != (len(self.bases[d - 1]), len(self.bases[d])):
                raise ValueError(f"differential {d} has shape {mat.shape}")
            self.diffs[d] = mat

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def ranks(self) -> list[int]:
        return [len(b) for b in self.bases]

    def basis(self, d: int) -> list:
        return self.bases[d] if 0 <= d < len(self.bases) else []

    def mdeg(self, d: int, tag) -> Monomial:
        return self.mdegs[d][self._index[d][tag]]

    def index(self, d: int, tag) -> int:
        return self._index[d][tag]

    def diff(self, d: int) -> MonomialMatrix:
        if d in self.diffs:
            return self.diffs[d]
        return MonomialMatrix(len(self.basis(d - 1)), len(self.basis(d)))

    def one(self) -> Monomial:
        return Monomial.one(*self.ambient)

    def __repr__(self) -> str:
        return f"FreeChainComplex(ranks={self.ranks()}, ambient={self.ambient})"


# -- builders ----------------------------------------------------------------

def build_cellular(C: LabeledComplex) -> FreeChainComplex:
    """Cellular complex of a labeled cell complex.

    The column of a cell E lists ``sign * label(E) / label(E')`` against
    each codimension-one face E'; vertices map to their labels in degree 0.
    """
    one = Monomial.one(*C.ambient)
    bases: list[list] = [[EMPTY]]
    mdegs: list[list[Monomial]] = [[one]]
    for d in range(1, C.top_degree + 1):
        cells = C.cells_in_degree(d)
        bases.append(cells)
        mdegs.append([C.label(c) for c in cells])
    diffs = {}
    if len(bases) > 1:
        diffs[1] = MonomialMatrix(1, len(bases[1]), {
            (0, k): MonomialSum.term(1, lab) for k, lab in enumerate(mdegs[1])})
    for d in range(2, len(bases)):
        row_index = {c: k for k, c in enumerate(bases[d - 1])}
        entries = {}
        for col, cell in enumerate(bases[d]):
            lab = mdegs[d][col]
            for sub, sign, _ in cell.boundary():
                row = row_index[sub]
                entries[(row, col)] = MonomialSum.term(sign, quotient(lab, mdegs[d - 1][row]))
        diffs[d] = MonomialMatrix(len(bases[d - 1]), len(bases[d]), entries)
    return FreeChainComplex(C.ambient, bases, mdegs, diffs, augmented=True)


def build_visscher(labeling: VertexLabeling) -> FreeChainComplex:
    return build_cellular(visscher_complex(labeling))


def build_edge_weighted(w: EdgeWeighting) -> FreeChainComplex:
    """F^omega_{m,n}."""
    return build_visscher(edge_weight_labels(w))


def build_taylor(labels: Sequence[Monomial], standard: bool = False) -> FreeChainComplex:
    return build_cellular(simplex(labels, standard=standard))


def truncate_shift(F: FreeChainComplex, negate: bool = False) -> FreeChainComplex:
    """Drop degree 0 and shift down by one: new degree d is old degree d+1.

    By default the differentials keep their signs, which is the convention
    under which the cone basis bijection needs no signs.  ``negate=True``
    gives the suspension sign convention instead.
    """
    if F.top < 1:
        raise ValueError("nothing left after truncation")
    diffs = {}
    for d in range(1, F.top):
        mat = F.diff(d + 1)
        diffs[d] = -mat if negate else mat
    return FreeChainComplex(F.ambient, F.bases[1:], F.mdegs[1:], diffs)


def twist(F: FreeChainComplex, by: Monomial) -> FreeChainComplex:
    """Multigraded twist: multidegrees are multiplied by ``by``, matrices unchanged."""
    return FreeChainComplex(F.ambient, F.bases, [[g * by for g in row] for row in F.mdegs],
                            F.diffs, F.augmented)


def embed_x(F: FreeChainComplex, at: int = 0) -> FreeChainComplex:
    """Base change to the ring with one more X variable (inserted at X-position ``at``)."""
    emb = lambda mono: mono.embed_x(at)
    return FreeChainComplex((F.ambient[0] + 1, F.ambient[1]), F.bases,
                            [[emb(g) for g in row] for row in F.mdegs],
                            {d: mat.map_monomials(emb) for d, mat in F.diffs.items()},
                            F.augmented)


def direct_sum(parts: Sequence[tuple[str, FreeChainComplex]]) -> FreeChainComplex:
    """Block-diagonal sum; basis tags become ``(name, tag)``, blocks in the given order."""
    ambient = parts[0][1].ambient
    top = max(F.top for _, F in parts)
    bases, mdegs = [], []
    offsets: list[list[int]] = []
    for d in range(top + 1):
        b, g, offs = [], [], []
        for name, F in parts:
            offs.append(len(b))
            b.extend((name, t) for t in F.basis(d))
            g.extend(F.mdegs[d] if d <= F.top else [])
        bases.append(b)
        mdegs.append(g)
        offsets.append(offs)
    diffs = {}
    for d in range(1, top + 1):
        entries = {}
        for p, (_, F) in enumerate(parts):
            if d > F.top:
                continue
            r0, c0 = offsets[d - 1][p], offsets[d][p]
            for (r, c), v in F.diff(d).entries.items():
                entries[(r0 + r, c0 + c)] = v
        diffs[d] = MonomialMatrix(len(bases[d - 1]), len(bases[d]), entries)
    return FreeChainComplex(ambient, bases, mdegs, diffs)


# -- checks ------------------------------------------------------------------

@dataclass
class CompositionFailure:
    degree: int
    row: Hashable
    col: Hashable
    residual: MonomialSum


def compose_is_zero(F: FreeChainComplex) -> tuple[bool, CompositionFailure | None]:
    """Check d_{d-1} ∘ d_d = 0 entrywise, reporting the first nonzero entry."""
    for d in range(2, F.top + 1):
        prod = F.diff(d - 1) @ F.diff(d)
        if prod.entries:
            (r, c) = min(prod.entries)
            return False, CompositionFailure(d, F.bases[d - 2][r], F.bases[d][c], prod.entries[(r, c)])
    return True, None


def is_minimal(F: FreeChainComplex) -> tuple[bool, tuple | None]:
    """True iff no differential entry is a unit.

    For augmented complexes the map onto S is skipped: its entries are the
    generators themselves.  The offending incidence is ``(d, row, col)``.
    """
    first = 2 if F.augmented else 1
    for d in range(first, F.top + 1):
        for (r, c), v in sorted(F.diff(d).entries.items()):
            if any(mono.is_one() and abs(coeff) == 1 for mono, coeff in v.items()):
                return False, (d, F.bases[d - 1][r], F.bases[d][c])
    return True, None


def is_multigraded(F: FreeChainComplex) -> bool:
    """Every entry times its row multidegree equals its column multidegree."""
    for d in range(1, F.top + 1):
        for (r, c), v in F.diff(d).entries.items():
            for mono, _ in v.items():
                if F.mdegs[d - 1][r] * mono != F.mdegs[d][c]:
                    return False
    return True


# -- chain maps --------------------------------------------------------------

class ChainMap:
    """Degree-0 map ``source -> target``; ``maps[d]`` is target_d x source_d."""

    def __init__(self, source: FreeChainComplex, target: FreeChainComplex,
                 maps: dict[int, MonomialMatrix]):
        self.source = source
        self.target = target
        self.maps = {}
        for d in range(max(source.top, target.top) + 1):
            shape = (len(target.basis(d)), len(source.basis(d)))
            mat = maps.get(d) or MonomialMatrix(*shape)
            if mat.shape != shape:
                raise ValueError(f"map in degree {d} has shape {mat.shape}, expected {shape}")
            self.maps[d] = mat

    def __getitem__(self, d: int) -> MonomialMatrix:
        if d in self.maps:
            return self.maps[d]
        return MonomialMatrix(len(self.target.basis(d)), len(self.source.basis(d)))

    def commutes(self) -> tuple[bool, int | None]:
        """Check target.d ∘ f = f ∘ source.d in every degree; returns the first bad degree."""
        for d in range(1, max(self.source.top, self.target.top) + 1):
            left = self.target.diff(d) @ self[d]
            right = self[d - 1] @ self.source.diff(d)
            if left != right:
                return False, d
        return True, None

    def is_multigraded(self) -> bool:
        for d, mat in self.maps.items():
            for (r, c), v in mat.entries.items():
                for mono, _ in v.items():
                    if self.target.mdegs[d][r] * mono != self.source.mdegs[d][c]:
                        return False
        return True

    def compose(self, inner: "ChainMap") -> "ChainMap":
        """``self ∘ inner``."""
        top = max(inner.source.top, self.target.top)
        return ChainMap(inner.source, self.target, {d: self[d] @ inner[d] for d in range(top + 1)})

    def is_identity(self) -> bool:
        if self.source is not self.target and self.source.bases != self.target.bases:
            return False
        one = self.source.one()
        return all(mat == MonomialMatrix.identity(mat.nrows, one) for mat in self.maps.values())


def mapping_cone(phi: ChainMap) -> FreeChainComplex:
    """Cone_i = U_i ⊕ W_{i-1} with differential [[d_U, phi], [0, -d_W]].

    Tags are ``("U", t)`` and ``("W", t)``; U-part first in every degree.
    """
    U, W = phi.target, phi.source
    top = max(U.top, W.top + 1)
    bases, mdegs = [], []
    for i in range(top + 1):
        bases.append([("U", t) for t in U.basis(i)] + [("W", t) for t in W.basis(i - 1)])
        mdegs.append((U.mdegs[i] if i <= U.top else []) + (W.mdegs[i - 1] if 1 <= i <= W.top + 1 else []))
    diffs = {}
    for i in range(1, top + 1):
        nu_i, nu_prev = len(U.basis(i)), len(U.basis(i - 1))
        entries = {}
        for (r, c), v in U.diff(i).entries.items():
            entries[(r, c)] = v
        for (r, c), v in phi[i - 1].entries.items():
            entries[(r, nu_i + c)] = v
        if i >= 2:
            for (r, c), v in W.diff(i - 1).entries.items():
                entries[(nu_prev + r, nu_i + c)] = -v
        diffs[i] = MonomialMatrix(len(bases[i - 1]), len(bases[i]), entries)
    return FreeChainComplex(U.ambient, bases, mdegs, diffs)


# -- the cone decomposition of Visscher's complex ------------------------------

def _distinguished_row(w: EdgeWeighting) -> int:
    alpha = min_weight(w)
    if w.m < 2:
        raise ValueError("need at least one X vertex besides the distinguished one")
    if any(x != alpha for x in w.omega[0]):
        raise ValueError(f"row X1 {w.omega[0]} is not constantly the minimum weight {alpha}")
    return alpha


def mdeg_face(mu: EdgeWeighting, a: int, B: Iterable[int]) -> Monomial:
    """X_a^{M_a} * prod_b Y_b^{mu(a,b)} with M_a the largest weight at X_a over B,
    written in the ring without the distinguished variable."""
    B = tuple(B)
    top = max(mu.weight(a, b) for b in B)
    x = [0] * mu.m
    x[a - 1] = top
    y = [0] * mu.n
    for b in B:
        y[b - 1] = mu.weight(a, b)
    return Monomial.from_xy(x, y)


def mdeg_taylor(alpha: int, B: Iterable[int], m: int, n: int) -> Monomial:
    """X_0^alpha * prod_b Y_b^alpha in the ring whose first X variable is X_0."""
    y = [0] * n
    for b in B:
        y[b - 1] = alpha
    return Monomial.from_xy([alpha] + [0] * (m - 1), y)


@dataclass
class ConeData:
    """Everything ``build_phi`` assembles, kept for inspection and tests."""
    weighting: EdgeWeighting
    alpha: int
    mu: EdgeWeighting
    fbar_mu: FreeChainComplex
    tbar: FreeChainComplex
    source: FreeChainComplex
    target: FreeChainComplex
    phi: ChainMap


def build_phi(w: EdgeWeighting) -> ConeData:
    """The chain map phi whose cone rebuilds the truncated Visscher complex.

    Row X1 of ``w`` plays the distinguished vertex and must be constantly the
    global minimum alpha.  With mu the weighting left after deleting X1,
    phi maps the X1^alpha-twisted copy of Fbar^mu into Fbar^mu ⊕ Tbar,
    where Tbar is the truncated Taylor complex on X1^alpha*Yb^alpha.  A basis
    element [A, B] goes to X1^alpha [A, B] in the first summand and, when
    A = {a}, to -X1^alpha * mdeg([a,B]) / mdeg([B]) [B] in the second.
    """
    alpha = _distinguished_row(w)
    mu = delete_vertex(w, "X", 1)
    big_m, n = w.m, w.n
    x0 = Monomial.var("X", 1, big_m, n, alpha)

    fbar_mu = embed_x(truncate_shift(build_edge_weighted(mu)), at=0)
    taylor_labels = [x0 * Monomial.var("Y", b, big_m, n, alpha) for b in range(1, n + 1)]
    tbar = truncate_shift(build_taylor(taylor_labels))
    source = twist(fbar_mu, x0)
    target = direct_sum([("F", fbar_mu), ("T", tbar)])

    maps = {}
    for d in range(source.top + 1):
        entries = {}
        for col, face in enumerate(source.basis(d)):
            entries[(target.index(d, ("F", face)), col)] = MonomialSum.term(1, x0)
            if len(face.A) == 1:
                a = face.A[0]
                num = x0 * mdeg_face(mu, a, face.B).embed_x(0)
                coeff = quotient(num, mdeg_taylor(alpha, face.B, big_m, n))
                entries[(target.index(d, ("T", Simplex(face.B))), col)] = MonomialSum.term(-1, coeff)
        maps[d] = MonomialMatrix(len(target.basis(d)), len(source.basis(d)), entries)
    phi = ChainMap(source, target, maps)
    return ConeData(w, alpha, mu, fbar_mu, tbar, source, target, phi)


def cone_to_visscher_tag(tag) -> Face:
    """Basis rule for Phi: cone tag -> face of V_{m+1,n} (X1 distinguished)."""
    part, inner = tag
    if part == "U":
        kind, cell = inner
        if kind == "F":
            return Face(tuple(a + 1 for a in cell.A), cell.B)
        if kind == "T":
            return Face((1,), cell.V)
    elif part == "W":
        return Face((1,) + tuple(a + 1 for a in inner.A), inner.B)
    raise ValueError(f"not a cone basis tag: {tag!r}")


def visscher_to_cone_tag(face: Face):
    """Basis rule for Psi, the three cases 1 ∉ A, A = {1}, A ⊋ {1}."""
    if 1 not in face.A:
        return ("U", ("F", Face(tuple(a - 1 for a in face.A), face.B)))
    if face.A == (1,):
        return ("U", ("T", Simplex(face.B)))
    return ("W", Face(tuple(a - 1 for a in face.A if a != 1), face.B))


def _basis_map(source: FreeChainComplex, target: FreeChainComplex, rule) -> ChainMap:
    one = source.one()
    maps = {}
    for d in range(max(source.top, target.top) + 1):
        entries = {}
        for col, tag in enumerate(source.basis(d)):
            image = rule(tag)
            try:
                row = target.index(d, image)
            except (KeyError, IndexError):
                raise ValueError(f"basis mismatch: {tag} -> {image} not in degree {d}") from None
            entries[(row, col)] = MonomialSum.term(1, one)
        maps[d] = MonomialMatrix(len(target.basis(d)), len(source.basis(d)), entries)
    return ChainMap(source, target, maps)


@dataclass
class IsomorphismCheck:
    Phi: ChainMap
    Psi: ChainMap
    phi_commutes: bool
    psi_commutes: bool
    round_trips: bool

    @property
    def verified(self) -> bool:
        return self.phi_commutes and self.psi_commutes and self.round_trips


def phi_psi_isomorphism(cone: FreeChainComplex, fbar: FreeChainComplex,
                        phi_rule=cone_to_visscher_tag, psi_rule=visscher_to_cone_tag) -> IsomorphismCheck:
    """Build Phi: cone -> fbar and Psi: fbar -> cone from the basis rules and
    verify they are mutually inverse chain maps."""
    if cone.ranks() != fbar.ranks():
        raise ValueError(f"basis mismatch: ranks {cone.ranks()} vs {fbar.ranks()}")
    Phi = _basis_map(cone, fbar, phi_rule)
    Psi = _basis_map(fbar, cone, psi_rule)
    round_trips = Phi.compose(Psi).is_identity() and Psi.compose(Phi).is_identity()
    return IsomorphismCheck(Phi, Psi, Phi.commutes()[0], Psi.commutes()[0], round_trips)


def cone_of(w: EdgeWeighting) -> tuple[ConeData, FreeChainComplex, FreeChainComplex]:
    """Convenience: (phi data, Cone(phi), Fbar^omega) for a weighting with X1 distinguished."""
    data = build_phi(w)
    return data, mapping_cone(data.phi), truncate_shift(build_edge_weighted(w))
