"""Independent ordinal arithmetic below omega^omega on coefficient vectors.

``PolyOrdinal((c0, c1, ..., cd))`` denotes ``omega^d*cd + ... + omega*c1 + c0``.
None of this module reuses :mod:`ordkit.core` arithmetic; it is the second
implementation the differential harness checks against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .core import Cmp, Ordinal


@dataclass(frozen=True)
class PolyOrdinal:
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(self.coeffs)
        if any(x < 0 for x in c):
            raise ValueError("coefficients must be natural numbers")
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Exponent of the leading term; -1 for zero."""
        return len(self.coeffs) - 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                base = "w" if i == 1 else f"w^{i}"
                parts.append(base if c == 1 else f"{base}*{c}")
        return " + ".join(parts)


def poly_cmp(a: PolyOrdinal, b: PolyOrdinal) -> Cmp:
    if a.degree != b.degree:
        return Cmp.LT if a.degree < b.degree else Cmp.GT
    for i in range(a.degree, -1, -1):
        x, y = a.coeffs[i], b.coeffs[i]
        if x != y:
            return Cmp.LT if x < y else Cmp.GT
    return Cmp.EQ


def poly_add(a: PolyOrdinal, b: PolyOrdinal) -> PolyOrdinal:
    d = b.degree
    if d < 0:
        return a
    out = list(b.coeffs)
    if a.degree >= d:
        # everything in a below omega^d is swallowed by b's head
        out[d] += a.coeffs[d]
        out.extend(a.coeffs[d + 1 :])
    return PolyOrdinal(tuple(out))


def _times_monomial(a: PolyOrdinal, i: int, n: int) -> PolyOrdinal:
    """``a * omega^i * n``."""
    if a.degree < 0 or n == 0:
        return PolyOrdinal()
    if i == 0:
        out = list(a.coeffs)
        out[-1] *= n
        return PolyOrdinal(tuple(out))
    out = [0] * (a.degree + i + 1)
    out[a.degree + i] = n
    return PolyOrdinal(tuple(out))


def poly_mul(a: PolyOrdinal, b: PolyOrdinal) -> PolyOrdinal:
    # left distributivity: a*(x + y) = a*x + a*y, over b's monomials high to low
    total = PolyOrdinal()
    for i in range(b.degree, -1, -1):
        if b.coeffs[i]:
            total = poly_add(total, _times_monomial(a, i, b.coeffs[i]))
    return total


def to_poly(x: Ordinal) -> PolyOrdinal:
    """Convert an ordinal below omega^omega; raises ``ValueError`` otherwise."""
    if not x.terms:
        return PolyOrdinal()
    top = x.terms[0][0]
    if not top.is_finite:
        raise ValueError(f"{x} is not below omega^omega")
    out = [0] * (int(top) + 1)
    for e, c in x.terms:
        out[int(e)] = c
    return PolyOrdinal(tuple(out))


def from_poly(p: PolyOrdinal) -> Ordinal:
    return Ordinal([(i, p.coeffs[i]) for i in range(p.degree, -1, -1) if p.coeffs[i]])
