"""Finitely supported functions and the Cantor normal form bijection.

A :class:`FinSuppFn` maps indexes below ``index_bound`` to values below
``base``; only the finitely many nonzero values are stored. ``cnf_eval``
sends ``f`` to ``sum(base**i * f(i))`` over the support, largest index
first, which is a bijection onto the ordinal ``base ** index_bound``;
``cnf_inv`` is its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .core import ONE, ZERO, Ordinal, add, div_mod, leading, mul, nat, power, predecessor
from .errors import BadBase, DomainMismatch, MalformedCNF, OutOfRange, ZeroNotFixed

Entry = Tuple[Ordinal, Ordinal]


@dataclass(frozen=True)
class FinSuppFn:
    base: Ordinal
    index_bound: Ordinal
    entries: Tuple[Entry, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        prev = None
        for idx, val in entries:
            if not idx < self.index_bound:
                raise MalformedCNF(f"index {idx} is not below {self.index_bound}")
            if not val:
                raise MalformedCNF(f"zero value stored at index {idx}")
            if not val < self.base:
                raise MalformedCNF(f"value {val} is not below base {self.base}")
            if prev is not None and not idx < prev:
                raise MalformedCNF("indexes must be strictly decreasing")
            prev = idx

    @classmethod
    def from_mapping(cls, base, index_bound, mapping) -> "FinSuppFn":
        """Build from ``{index: value}``; zero values are dropped."""
        items = sorted(((i, v) for i, v in mapping.items() if v), key=lambda kv: kv[0].key, reverse=True)
        return cls(base, index_bound, tuple(items))

    def __call__(self, idx: Ordinal) -> Ordinal:
        for i, v in self.entries:
            if i == idx:
                return v
        return ZERO

    @property
    def support(self):
        return tuple(i for i, _ in self.entries)

    def __str__(self):
        return "{" + ", ".join(f"{i}: {v}" for i, v in self.entries) + "}"


def cnf_eval(f: FinSuppFn) -> Ordinal:
    total = ZERO
    for idx, val in f.entries:
        total = add(total, mul(power(f.base, idx), val))
    return total


def _floor_log_nat(k: int, n: int) -> int:
    """Largest ``e`` with ``k**e <= n`` for naturals ``k >= 2, n >= 1``."""
    e = max(n.bit_length() // k.bit_length() - 1, 0)
    while k ** (e + 1) <= n:
        e += 1
    return e


def floor_log(alpha: Ordinal, z: Ordinal) -> Ordinal:
    """Largest ``g`` with ``alpha ** g <= z``; needs ``alpha >= 2`` and ``z >= 1``."""
    if alpha.is_finite:
        k = int(alpha)
        if z.is_finite:
            return nat(_floor_log_nat(k, int(z)))
        # k ** (omega*d + n) == omega**d * k**n
        lead_exp, lead_coeff, _ = leading(z)
        return add(mul(Ordinal._raw(((ONE, 1),)), lead_exp), nat(_floor_log_nat(k, lead_coeff)))
    # leading exponent of alpha**g is (leading exponent of alpha) * g
    q, r = div_mod(leading(z)[0], leading(alpha)[0])
    if r or power(alpha, q) <= z:
        return q
    return predecessor(q)


def cnf_inv(alpha: Ordinal, beta: Ordinal, z: Ordinal) -> FinSuppFn:
    if not alpha:
        raise BadBase("base must be at least 1")
    if not z < power(alpha, beta):
        raise OutOfRange(f"{z} is not below {alpha}^({beta})")
    entries = []
    while z:
        g = floor_log(alpha, z)
        d, z = div_mod(z, power(alpha, g))
        entries.append((g, d))
    return FinSuppFn(alpha, beta, tuple(entries))


def lift_index(iota, f: FinSuppFn) -> FinSuppFn:
    """Relabel indexes: the result ``g`` satisfies ``g(iota(i)) == f(i)``."""
    from .bij import Ord

    if iota.domain != Ord(f.index_bound) or not isinstance(iota.codomain, Ord):
        raise DomainMismatch(f"{iota} does not act on indexes below {f.index_bound}")
    moved = [(iota.forward(i), v) for i, v in f.entries]
    moved.sort(key=lambda kv: kv[0].key, reverse=True)
    return FinSuppFn(f.base, iota.codomain.bound, tuple(moved))


def lift_value(c, f: FinSuppFn) -> FinSuppFn:
    """Relabel values through ``c``, which must fix zero."""
    from .bij import Ord

    if c.domain != Ord(f.base) or not isinstance(c.codomain, Ord):
        raise DomainMismatch(f"{c} does not act on values below {f.base}")
    if c.forward(ZERO) != ZERO:
        raise ZeroNotFixed(f"{c} does not send 0 to 0")
    return FinSuppFn(c.codomain.bound, f.index_bound, tuple((i, c.forward(v)) for i, v in f.entries))
