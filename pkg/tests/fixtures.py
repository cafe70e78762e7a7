"""Golden matrices for K_{2,2} and K_{2,3} with symbolic exponents.

Entries use a small syntax: ``-X2^d*Y1^(b-a)``, where the letters a, b, c, d
stand for alpha, beta, gamma, delta.  ``instantiate`` turns a table into
integer MonomialSums for given values.  Rows and columns are already in the
library's basis order, so no permutation is needed.
"""
import re

from cellres.monomials import Monomial, MonomialSum

_FACTOR = re.compile(r"([XY])(\d+)(?:\^(\w+|\([^)]*\)))?")


def entry(text, m, n, values):
    text = text.strip()
    if text == "0":
        return MonomialSum()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    mono = Monomial.one(m, n)
    if text != "1":
        for factor in text.split("*"):
            side, idx, exp = _FACTOR.fullmatch(factor).groups()
            power = 1 if exp is None else eval(exp, {}, dict(values))
            if power < 0:
                raise ValueError(f"negative exponent in {factor} at {values}")
            mono = mono * Monomial.var(side, int(idx), m, n, power)
    return MonomialSum.term(sign, mono)


def instantiate(table, m, n, values=None):
    return [[entry(e, m, n, values or {}) for e in row.split()] for row in table]


# unweighted K_{2,2}
K22 = {
    1: ["X1*Y1 X1*Y2 X2*Y1 X2*Y2"],
    2: ["Y2 0 -X2 0",
        "-Y1 0 0 -X2",
        "0 Y2 X1 0",
        "0 -Y1 0 X1"],
    3: ["-X2", "X1", "-Y2", "Y1"],
}

# K_{2,2} with weights [[a, a], [b, c]]; the first d3 entry keeps a known typo (b-c for b-a)
K22_WEIGHTED = {
    1: ["X1^a*Y1^a X1^a*Y2^a X2^b*Y1^b X2^c*Y2^c"],
    2: ["Y2^a 0 -X2^b*Y1^(b-a) 0",
        "-Y1^a 0 0 -X2^c*Y2^(c-a)",
        "0 X2^(c-b)*Y2^c X1^a 0",
        "0 -Y1^b 0 X1^a"],
    3: ["-X2^c*Y1^(b-c)*Y2^(c-a)", "X1^a", "-X2^(c-b)*Y2^c", "Y1^b"],
}
K22_WEIGHTED_D3_FIRST_CORRECTED = "-X2^c*Y1^(b-a)*Y2^(c-a)"

# unweighted K_{2,3}
K23 = {
    1: ["X1*Y1 X1*Y2 X1*Y3 X2*Y1 X2*Y2 X2*Y3"],
    2: ["Y2 Y3 0 0 0 0 -X2 0 0",
        "-Y1 0 Y3 0 0 0 0 -X2 0",
        "0 -Y1 -Y2 0 0 0 0 0 -X2",
        "0 0 0 Y2 Y3 0 X1 0 0",
        "0 0 0 -Y1 0 Y3 0 X1 0",
        "0 0 0 0 -Y1 -Y2 0 0 X1"],
    3: ["-Y3 0 -X2 0 0",
        "Y2 0 0 -X2 0",
        "-Y1 0 0 0 -X2",
        "0 -Y3 X1 0 0",
        "0 Y2 0 X1 0",
        "0 -Y1 0 0 X1",
        "0 0 -Y2 -Y3 0",
        "0 0 Y1 0 -Y3",
        "0 0 0 Y1 Y2"],
    4: ["-X2", "X1", "Y3", "-Y2", "Y1"],
}

# K_{2,3} with weights [[a, a, a], [b, c, d]]
K23_WEIGHTED = {
    1: ["X1^a*Y1^a X1^a*Y2^a X1^a*Y3^a X2^b*Y1^b X2^c*Y2^c X2^d*Y3^d"],
    2: ["Y2^a Y3^a 0 0 0 0 -X2^b*Y1^(b-a) 0 0",
        "-Y1^a 0 Y3^a 0 0 0 0 -X2^c*Y2^(c-a) 0",
        "0 -Y1^a -Y2^a 0 0 0 0 0 -X2^d*Y3^(d-a)",
        "0 0 0 X2^(c-b)*Y2^c X2^(d-b)*Y3^d 0 X1^a 0 0",
        "0 0 0 -Y1^b 0 X2^(d-c)*Y3^d 0 X1^a 0",
        "0 0 0 0 -Y1^b -Y2^c 0 0 X1^a"],
    3: ["-Y3^a 0 -X2^c*Y1^(b-a)*Y2^(c-a) 0 0",
        "Y2^a 0 0 -X2^d*Y1^(b-a)*Y3^(d-a) 0",
        "-Y1^a 0 0 0 -X2^d*Y2^(c-a)*Y3^(d-a)",
        "0 -X2^(d-c)*Y3^d X1^a 0 0",
        "0 Y2^c 0 X1^a 0",
        "0 -Y1^b 0 0 X1^a",
        "0 0 -X2^(c-b)*Y2^c -X2^(d-b)*Y3^d 0",
        "0 0 Y1^b 0 -X2^(d-c)*Y3^d",
        "0 0 0 Y1^b Y2^c"],
    4: ["-X2^d*Y1^(b-a)*Y2^(c-a)*Y3^(d-a)", "X1^a", "X2^(d-c)*Y3^d", "-Y2^c", "Y1^b"],
}
