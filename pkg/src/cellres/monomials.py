"""Monomials and integer monomial sums in the variables X1..Xm, Y1..Yn.

Exponent vectors store the X block first and then the Y block, so the
position of Y_j is ``m + j - 1``.  Everything is exact; there is no
floating point anywhere in the package.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

_EXPONENT_LIMIT = 2**63 - 1


class AmbientMismatch(ValueError):
    """Raised when monomials from different rings are combined."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`quotient` when the divisor does not divide."""


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self):
        if len(self.exponents) != self.m + self.n:
            raise ValueError(
                f"expected {self.m + self.n} exponents, got {len(self.exponents)}"
            )
        for e in self.exponents:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers: {self.exponents}")
            if e > _EXPONENT_LIMIT:
                raise OverflowError(f"exponent {e} exceeds the 64-bit limit")

    # -- constructors -------------------------------------------------

    @classmethod
    def one(cls, m: int, n: int) -> "Monomial":
        return cls((0,) * (m + n), m, n)

    @classmethod
    def from_xy(cls, x: Iterable[int], y: Iterable[int]) -> "Monomial":
        x, y = tuple(x), tuple(y)
        return cls(x + y, len(x), len(y))

    @classmethod
    def var(cls, side: str, index: int, m: int, n: int, power: int = 1) -> "Monomial":
        """``var("X", 2, m, n)`` is X2; indices are 1-based."""
        exps = [0] * (m + n)
        exps[_position(side, index, m, n)] = power
        return cls(tuple(exps), m, n)

    @classmethod
    def parse(cls, text: str, m: int, n: int) -> "Monomial":
        """Inverse of ``str``: ``"X1^2*Y1^2"`` or ``"1"``."""
        text = text.strip()
        exps = [0] * (m + n)
        if text == "1":
            return cls(tuple(exps), m, n)
        for factor in text.split("*"):
            match = _FACTOR.fullmatch(factor.strip())
            if match is None:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            side, idx, power = match.group(1), int(match.group(2)), match.group(3)
            exps[_position(side, idx, m, n)] += int(power) if power else 1
        return cls(tuple(exps), m, n)

    # -- queries ------------------------------------------------------

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def x(self) -> tuple[int, ...]:
        return self.exponents[: self.m]

    @property
    def y(self) -> tuple[int, ...]:
        return self.exponents[self.m:]

    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def support(self) -> list[tuple[str, int]]:
        return [_name(k, self.m) for k, e in enumerate(self.exponents) if e]

    def sort_key(self) -> tuple:
        """Total degree first, then the exponent vector."""
        return (self.degree(), self.exponents)

    # -- arithmetic ---------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.m, self.n)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(a * k for a in self.exponents), self.m, self.n)

    def embed_x(self, at: int = 0) -> "Monomial":
        """Adjoin a new X variable at X-position ``at`` (0-based), exponent 0."""
        if not 0 <= at <= self.m:
            raise ValueError(f"insertion point {at} outside 0..{self.m}")
        exps = self.exponents[:at] + (0,) + self.exponents[at:]
        return Monomial(exps, self.m + 1, self.n)

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for k, e in enumerate(self.exponents):
            if e:
                side, idx = _name(k, self.m)
                parts.append(f"{side}{idx}" if e == 1 else f"{side}{idx}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self}, m={self.m}, n={self.n})"


_FACTOR = re.compile(r"([XY])(\d+)(?:\^(\d+))?")


def _position(side: str, index: int, m: int, n: int) -> int:
    if side == "X" and 1 <= index <= m:
        return index - 1
    if side == "Y" and 1 <= index <= n:
        return m + index - 1
    raise ValueError(f"no variable {side}{index} in ambient (m={m}, n={n})")


def _name(k: int, m: int) -> tuple[str, int]:
    return ("X", k + 1) if k < m else ("Y", k - m + 1)


def _check(a: Monomial, b: Monomial) -> None:
    if a.m != b.m or a.n != b.n:
        raise AmbientMismatch(f"ambient {a.ambient} vs {b.ambient}")


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return Monomial(tuple(max(p, q) for p, q in zip(a.exponents, b.exponents)), a.m, a.n)


def lcm_all(monomials: Iterable[Monomial]) -> Monomial:
    it = iter(monomials)
    try:
        result = next(it)
    except StopIteration:
        raise ValueError("lcm of an empty family") from None
    for mono in it:
        result = lcm(result, mono)
    return result


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return Monomial(tuple(min(p, q) for p, q in zip(a.exponents, b.exponents)), a.m, a.n)


def divides(a: Monomial, b: Monomial) -> bool:
    _check(a, b)
    return all(p <= q for p, q in zip(a.exponents, b.exponents))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; raises :class:`NotDivisible` unless ``b`` divides ``a``."""
    _check(a, b)
    diff = tuple(p - q for p, q in zip(a.exponents, b.exponents))
    if any(d < 0 for d in diff):
        raise NotDivisible(f"{b} does not divide {a}")
    return Monomial(diff, a.m, a.n)


class MonomialSum:
    """A finite integer combination of monomials, kept canonical.

    Instances are treated as immutable; every operation returns a new sum.
    Zero coefficients are never stored, so ``s.is_zero()`` is exact.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        merged: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        ambient = None
        for mono, coeff in items:
            if ambient is None:
                ambient = mono.ambient
            elif mono.ambient != ambient:
                raise AmbientMismatch(f"ambient {mono.ambient} vs {ambient}")
            merged[mono] = merged.get(mono, 0) + coeff
        self._terms = {k: v for k, v in merged.items() if v}
        self._hash = None

    @classmethod
    def term(cls, coeff: int, mono: Monomial) -> "MonomialSum":
        return cls([(mono, coeff)])

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def single(self) -> tuple[int, Monomial]:
        """The ``(coeff, monomial)`` pair of a one-term sum."""
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a single term")
        (mono, coeff), = self._terms.items()
        return coeff, mono

    def add(self, other: "MonomialSum") -> "MonomialSum":
        return MonomialSum(list(self._terms.items()) + list(other._terms.items()))

    def add_term(self, coeff: int, mono: Monomial) -> "MonomialSum":
        return MonomialSum(list(self._terms.items()) + [(mono, coeff)])

    def scale(self, coeff: int, mono: Monomial) -> "MonomialSum":
        """Multiply every term by ``coeff * mono``."""
        return MonomialSum([(m * mono, c * coeff) for m, c in self._terms.items()])

    def times(self, other: "MonomialSum") -> "MonomialSum":
        out: list[tuple[Monomial, int]] = []
        for mono, coeff in other._terms.items():
            out.extend((m * mono, c * coeff) for m, c in self._terms.items())
        return MonomialSum(out)

    def map_monomials(self, fn) -> "MonomialSum":
        return MonomialSum([(fn(m), c) for m, c in self._terms.items()])

    __add__ = add

    def __neg__(self) -> "MonomialSum":
        return MonomialSum([(m, -c) for m, c in self._terms.items()])

    def __sub__(self, other: "MonomialSum") -> "MonomialSum":
        return self.add(-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (mono, coeff) in enumerate(self.items()):
            out.append(render_term(coeff, mono, leading=(k == 0)))
        return "".join(out)

    def __repr__(self) -> str:
        return f"MonomialSum({self})"


def render_term(coeff: int, mono: Monomial, leading: bool = True) -> str:
    sign = "-" if coeff < 0 else ("" if leading else "+")
    mag = abs(coeff)
    if mono.is_one():
        body = str(mag)
    elif mag == 1:
        body = str(mono)
    else:
        body = f"{mag}*{mono}"
    return sign + body
