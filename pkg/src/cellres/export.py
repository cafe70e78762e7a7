"""Text, JSON and Macaulay2 renderings of complexes and ideals."""
from __future__ import annotations

import json

from .chains import FreeChainComplex, MonomialMatrix
from .monomials import Monomial


def render_tag(tag) -> str:
    if isinstance(tag, tuple) and len(tag) == 2 and isinstance(tag[0], str):
        return f"{tag[0]}:{render_tag(tag[1])}"
    return str(tag)


def matrix_text(mat: MonomialMatrix) -> str:
    cells = mat.to_strings()
    if not cells or not cells[0]:
        return f"({mat.nrows}x{mat.ncols} zero matrix)"
    width = max(len(s) for row in cells for s in row)
    return "\n".join("  ".join(s.rjust(width) for s in row) for row in cells)


def complex_text(F: FreeChainComplex) -> str:
    lines = ["ranks: " + " ".join(str(r) for r in F.ranks())]
    for d in range(1, F.top + 1):
        mat = F.diff(d)
        lines.append(f"d{d}: {mat.nrows}x{mat.ncols}")
        lines.append("  rows: " + " ".join(render_tag(t) for t in F.basis(d - 1)))
        lines.append("  cols: " + " ".join(render_tag(t) for t in F.basis(d)))
        lines.append(matrix_text(mat))
    return "\n".join(lines)


def _entry_json(mat: MonomialMatrix, r: int, c: int) -> list[dict]:
    return [{"coeff": coeff, "exponents": list(mono.exponents)} for mono, coeff in mat[r, c].items()]


def complex_json(F: FreeChainComplex) -> dict:
    """Each matrix entry is a list of ``{coeff, exponents}`` terms; [] is zero."""
    return {
        "ambient": list(F.ambient),
        "variables": variable_names(*F.ambient),
        "ranks": F.ranks(),
        "bases": [[render_tag(t) for t in b] for b in F.bases],
        "differentials": {
            str(d): [[_entry_json(F.diff(d), r, c) for c in range(F.diff(d).ncols)]
                     for r in range(F.diff(d).nrows)]
            for d in range(1, F.top + 1)
        },
    }


def complex_json_text(F: FreeChainComplex) -> str:
    return json.dumps(complex_json(F), indent=1, sort_keys=True)


def variable_names(m: int, n: int) -> list[str]:
    return [f"X{i}" for i in range(1, m + 1)] + [f"Y{j}" for j in range(1, n + 1)]


def _m2_entry(s: str) -> str:
    return s  # our term syntax (X1^2*Y1, -Y2, 0) is valid Macaulay2


def macaulay2_script(F: FreeChainComplex, generators: list[Monomial], characteristic: int = 0) -> str:
    """A self-contained script declaring the ring, the ideal and the differentials.

    Running it is left to the user; nothing here invokes Macaulay2.
    """
    m, n = F.ambient
    field = "QQ" if characteristic == 0 else f"ZZ/{characteristic}"
    lines = [
        f"S = {field}[{','.join(variable_names(m, n))}];",
        "I = ideal(" + ", ".join(str(g) for g in generators) + ");",
    ]
    names = []
    for d in range(1, F.top + 1):
        mat = F.diff(d)
        rows = ["{" + ", ".join(_m2_entry(s) for s in row) + "}" for row in mat.to_strings()]
        lines.append(f"d{d} = map(S^{mat.nrows}, S^{mat.ncols}, {{" + ", ".join(rows) + "});")
        names.append(f"d{d}")
    for d in range(2, F.top + 1):
        lines.append(f"assert(d{d - 1} * d{d} == 0);")
    if names:
        lines.append("C = chainComplex{" + ", ".join(names) + "};")
        lines.append("assert(ideal d1 == I);")
    return "\n".join(lines) + "\n"
