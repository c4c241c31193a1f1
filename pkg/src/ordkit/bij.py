"""Explicit, invertible bijections between ordinal-shaped sets.

A :class:`Bijection` is a tree of named primitive :class:`Step` nodes
glued together by :class:`Compose`, :class:`Inverse` and :class:`Product`.
Every node knows its domain and codomain and checks points on the way in,
so a chain built from mismatched pieces fails at construction and a bad
point fails at the first step it reaches.

Points are :class:`~ordkit.core.Ordinal` (for ``Ord``), 2-tuples of points
(for ``Prod``) or :class:`~ordkit.finsupp.FinSuppFn` (for ``Fun``).

Passing ``trace=callable`` to ``forward``/``backward`` calls
``trace(step_name, input_point, output_point)`` once per primitive step in
evaluation order.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .core import (
    OMEGA,
    TWO,
    Ordinal,
    add,
    div_mod,
    leading,
    mul,
    nat,
    omega_power,
    power,
    sub_left,
)
from .errors import CastUnequal, DivisionByZero, DomainMismatch, PointOutOfDomain, TooSmall
from .finsupp import FinSuppFn, cnf_eval, cnf_inv, lift_index, lift_value

Trace = Optional[Callable[[str, object, object], None]]


# -- domains -----------------------------------------------------------------


@dataclass(frozen=True)
class Ord:
    """The set of ordinals below ``bound``."""

    bound: Ordinal

    def __contains__(self, x):
        return isinstance(x, Ordinal) and x < self.bound

    def __str__(self):
        return f"Ord({self.bound})"


@dataclass(frozen=True)
class Prod:
    left: "Domain"
    right: "Domain"

    def __contains__(self, x):
        return isinstance(x, tuple) and len(x) == 2 and x[0] in self.left and x[1] in self.right

    def __str__(self):
        return f"{self.left} x {self.right}"


@dataclass(frozen=True)
class Fun:
    """Finitely supported functions ``index_bound -> base``."""

    base: Ordinal
    index_bound: Ordinal

    def __contains__(self, x):
        return isinstance(x, FinSuppFn) and x.base == self.base and x.index_bound == self.index_bound

    def __str__(self):
        return f"Fun({self.index_bound} -> {self.base})"


Domain = Union[Ord, Prod, Fun]


def format_point(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(format_point(p) for p in x) + ")"
    return str(x)


# -- bijection nodes ---------------------------------------------------------


class Bijection:
    domain: Domain
    codomain: Domain

    def forward(self, x, trace: Trace = None):
        if x not in self.domain:
            raise PointOutOfDomain(f"{format_point(x)} is not in {self.domain}")
        return self._forward(x, trace)

    def backward(self, y, trace: Trace = None):
        if y not in self.codomain:
            raise PointOutOfDomain(f"{format_point(y)} is not in {self.codomain}")
        return self._backward(y, trace)

    __call__ = forward

    def steps(self):
        """Primitive step names in forward evaluation order."""
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.domain} <-> {self.codomain}>"


class Step(Bijection):
    def __init__(self, name: str, domain: Domain, codomain: Domain, fwd, bwd):
        self.name = name
        self.domain = domain
        self.codomain = codomain
        self._fwd = fwd
        self._bwd = bwd

    def _forward(self, x, trace):
        y = self._fwd(x)
        if trace is not None:
            trace(self.name, x, y)
        return y

    def _backward(self, y, trace):
        x = self._bwd(y)
        if trace is not None:
            trace(self.name + "^-1", y, x)
        return x

    def steps(self):
        return [self.name]

    def __repr__(self):
        return f"<Step {self.name}: {self.domain} <-> {self.codomain}>"


class Compose(Bijection):
    """Apply ``first`` and then ``second``."""

    def __init__(self, first: Bijection, second: Bijection):
        if first.codomain != second.domain:
            raise DomainMismatch(f"cannot compose {first.codomain} with {second.domain}")
        self.first = first
        self.second = second
        self.domain = first.domain
        self.codomain = second.codomain

    def _forward(self, x, trace):
        return self.second._forward(self.first._forward(x, trace), trace)

    def _backward(self, y, trace):
        return self.first._backward(self.second._backward(y, trace), trace)

    def steps(self):
        return self.first.steps() + self.second.steps()


class Inverse(Bijection):
    def __init__(self, inner: Bijection):
        self.inner = inner
        self.domain = inner.codomain
        self.codomain = inner.domain

    def _forward(self, x, trace):
        return self.inner._backward(x, trace)

    def _backward(self, y, trace):
        return self.inner._forward(y, trace)

    def steps(self):
        return [s[:-3] if s.endswith("^-1") else s + "^-1" for s in reversed(self.inner.steps())]


class Product(Bijection):
    """Act with ``left`` and ``right`` on the two coordinates of a pair."""

    def __init__(self, left: Bijection, right: Bijection):
        self.left = left
        self.right = right
        self.domain = Prod(left.domain, right.domain)
        self.codomain = Prod(left.codomain, right.codomain)

    def _forward(self, x, trace):
        return (self.left._forward(x[0], trace), self.right._forward(x[1], trace))

    def _backward(self, y, trace):
        return (self.left._backward(y[0], trace), self.right._backward(y[1], trace))

    def steps(self):
        return self.left.steps() + self.right.steps()


def compose(*maps: Bijection) -> Bijection:
    """Chain bijections left to right: ``compose(f, g)(x) == g(f(x))``."""
    if not maps:
        raise ValueError("compose needs at least one bijection")
    return functools.reduce(Compose, maps)


def invert(f: Bijection) -> Bijection:
    if isinstance(f, Inverse):
        return f.inner
    return Inverse(f)


def prod(f: Bijection, g: Bijection) -> Bijection:
    return Product(f, g)


def identity(domain: Domain) -> Bijection:
    return Step(f"id[{domain}]", domain, domain, _same, _same)


def _same(x):
    return x


def cast(a: Ordinal, b: Ordinal) -> Bijection:
    """Identity ``Ord(a) -> Ord(b)``, allowed only when ``a == b`` exactly."""
    if a != b:
        raise CastUnequal(f"cast between unequal ordinals {a} and {b}")
    return Step(f"cast[{a}]", Ord(a), Ord(b), _same, _same)


def swap(left: Domain, right: Domain) -> Bijection:
    return Step("swap", Prod(left, right), Prod(right, left), _flip, _flip)


def _flip(p):
    return (p[1], p[0])


# -- the explicit bijections -------------------------------------------------


@functools.lru_cache(maxsize=None)
def add_commute(a: Ordinal, b: Ordinal) -> Bijection:
    """``Ord(a + b) <-> Ord(b + a)``: swap the two blocks of the sum."""

    def fwd(z):
        return add(b, z) if z < a else sub_left(a, z)

    def bwd(y):
        return add(a, y) if y < b else sub_left(b, y)

    return Step(f"add_commute[{a}, {b}]", Ord(add(a, b)), Ord(add(b, a)), fwd, bwd)


@functools.lru_cache(maxsize=None)
def mul_split(a: Ordinal, b: Ordinal) -> Bijection:
    """``Ord(a*b) <-> Ord(b) x Ord(a)``, ``z -> (quotient, remainder)``."""
    if not a:
        raise DivisionByZero("mul_split needs a nonzero left factor")

    def fwd(z):
        return div_mod(z, a)

    def bwd(p):
        return add(mul(a, p[0]), p[1])

    return Step(f"mul_split[{a}, {b}]", Ord(mul(a, b)), Prod(Ord(b), Ord(a)), fwd, bwd)


@functools.lru_cache(maxsize=None)
def mul_commute(a: Ordinal, b: Ordinal) -> Bijection:
    """``Ord(a*b) <-> Ord(b*a)`` via ``a*q + r  ->  b*r + q``."""
    if not a or not b:
        raise DivisionByZero("mul_commute needs nonzero factors")
    return compose(mul_split(a, b), swap(Ord(b), Ord(a)), invert(mul_split(b, a)))


def index_swap(gamma: Ordinal) -> Bijection:
    """``Ord(gamma*2) <-> Ord(2*gamma)``, the relabeling of exponent positions."""
    if not gamma:
        raise DivisionByZero("index_swap needs gamma >= 1")
    return mul_commute(gamma, TWO)


def _cantor_pair(p):
    m, n = int(p[0]), int(p[1])
    s = m + n
    return nat(s * (s + 1) // 2 + n)


def _cantor_unpair(z):
    z = int(z)
    w = (math.isqrt(8 * z + 1) - 1) // 2
    n = z - w * (w + 1) // 2
    return (nat(w - n), nat(n))


@functools.lru_cache(maxsize=None)
def cantor_nat() -> Bijection:
    """Cantor's quadratic pairing ``Ord(w) x Ord(w) <-> Ord(w)``."""
    return Step("cantor_nat", Prod(Ord(OMEGA), Ord(OMEGA)), Ord(OMEGA), _cantor_pair, _cantor_unpair)


@functools.lru_cache(maxsize=None)
def omega_sq_collapse() -> Bijection:
    """``Ord(w^2) <-> Ord(w)``: split ``w*q + r`` and Cantor-pair ``(q, r)``."""
    return compose(cast(power(OMEGA, TWO), mul(OMEGA, OMEGA)), mul_split(OMEGA, OMEGA), cantor_nat())


@functools.lru_cache(maxsize=None)
def cnf_head(beta: Ordinal) -> Bijection:
    """``Ord(beta) <-> Ord(w^g)`` where ``w^g`` is the leading power of ``beta``.

    With ``beta = w^g*k + rho``: move the tail ``rho`` in front (where it is
    absorbed), then turn ``w^g*k`` into ``k*w^g = w^g``.
    """
    if beta < OMEGA:
        raise TooSmall(f"cnf_head needs beta >= w, got {beta}")
    g, k, rho = leading(beta)
    pw = omega_power(g)
    head = mul(pw, nat(k))
    return compose(
        cast(beta, add(head, rho)),
        add_commute(head, rho),
        cast(add(rho, head), head),
        mul_commute(pw, nat(k)),
        cast(mul(nat(k), pw), pw),
    )


def _cnf_step(alpha: Ordinal, beta: Ordinal) -> Bijection:
    """``Ord(alpha^beta) <-> Fun(beta -> alpha)`` given by cnf_inv / cnf_eval."""
    return Step(
        f"cnf_inv[{alpha}, {beta}]",
        Ord(power(alpha, beta)),
        Fun(alpha, beta),
        lambda z: cnf_inv(alpha, beta, z),
        cnf_eval,
    )


def _lift_index_step(iota: Bijection, base: Ordinal) -> Bijection:
    return Step(
        "lift_index",
        Fun(base, iota.domain.bound),
        Fun(base, iota.codomain.bound),
        lambda f: lift_index(iota, f),
        lambda f: lift_index(invert(iota), f),
    )


def _lift_value_step(c: Bijection, index_bound: Ordinal) -> Bijection:
    return Step(
        "lift_value",
        Fun(c.domain.bound, index_bound),
        Fun(c.codomain.bound, index_bound),
        lambda f: lift_value(c, f),
        lambda f: lift_value(invert(c), f),
    )


@functools.lru_cache(maxsize=None)
def power_pairing(gamma: Ordinal) -> Bijection:
    """``Ord(w^g) x Ord(w^g) <-> Ord(w^g)`` for ``g >= 1``."""
    pw = omega_power(gamma)
    g2 = mul(gamma, TWO)
    two_g = mul(TWO, gamma)
    omega_sq = power(OMEGA, TWO)
    return compose(
        invert(mul_split(pw, pw)),
        cast(mul(pw, pw), power(OMEGA, g2)),
        _cnf_step(OMEGA, g2),
        _lift_index_step(index_swap(gamma), OMEGA),
        invert(_cnf_step(OMEGA, two_g)),
        cast(power(OMEGA, two_g), power(omega_sq, gamma)),
        _cnf_step(omega_sq, gamma),
        _lift_value_step(omega_sq_collapse(), gamma),
        invert(_cnf_step(OMEGA, gamma)),
    )


@functools.lru_cache(maxsize=None)
def pairing(beta: Ordinal) -> Bijection:
    """Canonical pairing ``Ord(beta) x Ord(beta) <-> Ord(beta)`` for ``beta >= w``."""
    if beta < OMEGA:
        raise TooSmall(f"pairing needs beta >= w, got {beta}")
    e = cnf_head(beta)
    gamma = leading(beta)[0]
    return compose(prod(e, e), power_pairing(gamma), invert(e))


__all__ = [
    "Ord",
    "Prod",
    "Fun",
    "Bijection",
    "Step",
    "format_point",
    "compose",
    "invert",
    "prod",
    "identity",
    "cast",
    "swap",
    "add_commute",
    "mul_split",
    "mul_commute",
    "index_swap",
    "cantor_nat",
    "omega_sq_collapse",
    "cnf_head",
    "power_pairing",
    "pairing",
]
