"""Ordinals below epsilon-zero in hereditary Cantor normal form.

An :class:`Ordinal` is an immutable, strictly decreasing tuple of
``(exponent, coefficient)`` terms, where every exponent is itself an
:class:`Ordinal` and every coefficient is a positive ``int``. The empty
tuple is zero. Normal forms are unique, so equality is structural.

Ordering is decided by a precomputed nested-tuple key: Python's
lexicographic tuple comparison on ``((exponent_key, coefficient), ...)``
is exactly the CNF order (exponent first, then coefficient, and a proper
prefix is smaller).

The arithmetic is available both as functions (``add``, ``mul``,
``power``, ``sub_left``, ``div_mod``) and as operators; ``pow(a, b)`` and
``divmod(z, a)`` work through the builtins.
"""

from __future__ import annotations

import enum
from typing import Iterable, Tuple, Union

from .errors import DivisionByZero, MalformedCNF, Underflow, ZeroOrdinal

__all__ = [
    "Ordinal",
    "Cmp",
    "Kind",
    "ZERO",
    "ONE",
    "TWO",
    "OMEGA",
    "make",
    "nat",
    "omega_power",
    "compare",
    "add",
    "mul",
    "power",
    "sub_left",
    "div_mod",
    "leading",
    "classify",
    "predecessor",
]

Term = Tuple["Ordinal", int]
OrdLike = Union["Ordinal", int]


class Cmp(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"

    def __str__(self):
        return self.value


class Kind(enum.Enum):
    ZERO = "Zero"
    SUCCESSOR = "Successor"
    LIMIT = "Limit"

    def __str__(self):
        return self.value


class Ordinal:
    __slots__ = ("terms", "key", "_hash")

    terms: Tuple[Term, ...]
    key: tuple

    def __init__(self, terms: Iterable[Tuple[OrdLike, int]] = ()):
        checked = []
        prev = None
        for item in terms:
            try:
                exp, coeff = item
            except (TypeError, ValueError):
                raise MalformedCNF(f"term {item!r} is not an (exponent, coefficient) pair")
            exp = _coerce_strict(exp)
            if isinstance(coeff, bool) or not isinstance(coeff, int):
                raise MalformedCNF(f"coefficient {coeff!r} is not a natural number")
            if coeff < 1:
                raise MalformedCNF(f"coefficient {coeff} must be at least 1")
            if prev is not None and not exp.key < prev.key:
                raise MalformedCNF("exponents must be strictly decreasing")
            checked.append((exp, coeff))
            prev = exp
        self._init(tuple(checked))

    def _init(self, terms):
        self.terms = terms
        self.key = tuple([(e.key, c) for e, c in terms])
        self._hash = None

    @classmethod
    def _raw(cls, terms) -> "Ordinal":
        # Caller guarantees the invariants.
        obj = object.__new__(cls)
        obj._init(tuple(terms))
        return obj

    # -- inspection --------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and bool(self.terms[-1][0].terms)

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].terms

    def __int__(self):
        if not self.terms:
            return 0
        if not self.is_finite:
            raise OverflowError(f"{self} is infinite")
        return self.terms[0][1]

    def __index__(self):
        return int(self)

    def depth(self) -> int:
        """Nesting depth: 0 for zero, 1 for naturals, 2 below omega^omega, ..."""
        if not self.terms:
            return 0
        return 1 + max(e.depth() for e, _ in self.terms)

    # -- ordering and hashing ----------------------------------------------

    def __hash__(self):
        if self._hash is None:
            # finite ordinals hash like the ints they compare equal to
            self._hash = hash(int(self)) if self.is_finite else hash(self.key)
        return self._hash

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.key == other.key

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.key < other.key

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.key <= other.key

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.key > other.key

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.key >= other.key

    # -- arithmetic operators ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else add(self, other)

    def __radd__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else add(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else mul(other, self)

    def __pow__(self, other, mod=None):
        if mod is not None:
            return NotImplemented
        other = _coerce(other)
        return other if other is NotImplemented else power(self, other)

    def __rpow__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else power(other, self)

    def __divmod__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else div_mod(self, other)

    def __rdivmod__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else div_mod(other, self)

    # -- text --------------------------------------------------------------

    def __str__(self):
        return _format(self, " + ")

    def __repr__(self):
        return f"Ordinal({str(self)!r})"

    def __reduce__(self):
        return (Ordinal, (self.terms,))


def _format(x: Ordinal, sep: str) -> str:
    if not x.terms:
        return "0"
    return sep.join(_format_term(e, c) for e, c in x.terms)


def _format_exponent(e: Ordinal) -> str:
    if e.is_finite:
        return str(int(e))
    if e.key == OMEGA.key:
        return "w"
    # nested exponents are printed without spaces: w^(w+1)
    return f"({_format(e, '+')})"


def _format_term(e: Ordinal, c: int) -> str:
    if not e.terms:
        return str(c)
    base = "w" if e.key == ONE.key else f"w^{_format_exponent(e)}"
    return base if c == 1 else f"{base}*{c}"


_SMALL = {}


def nat(n: int) -> Ordinal:
    """The finite ordinal ``n``."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 0:
        raise MalformedCNF(f"{n} is negative")
    cached = _SMALL.get(n)
    if cached is not None:
        return cached
    out = Ordinal._raw(((ZERO, n),) if n else ())
    if n < 256:
        _SMALL[n] = out
    return out


def _coerce(x):
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool) and x >= 0:
        return nat(x)
    return NotImplemented


def _coerce_strict(x) -> Ordinal:
    y = _coerce(x)
    if y is NotImplemented:
        raise MalformedCNF(f"{x!r} is not an ordinal")
    return y


ZERO = Ordinal._raw(())
_SMALL[0] = ZERO
ONE = nat(1)
TWO = nat(2)
OMEGA = Ordinal._raw(((ONE, 1),))


def make(terms: Iterable[Tuple[OrdLike, int]]) -> Ordinal:
    """Validated constructor from a list of ``(exponent, coefficient)`` pairs.

    >>> make([(1, 2), (0, 3)])
    Ordinal('w*2 + 3')
    """
    return Ordinal(terms)


def omega_power(e: OrdLike, k: int = 1) -> Ordinal:
    """``omega ** e * k``."""
    e = _coerce_strict(e)
    if k < 1:
        raise MalformedCNF("coefficient must be at least 1")
    return Ordinal._raw(((e, k),))


def compare(a: Ordinal, b: Ordinal) -> Cmp:
    if a.key < b.key:
        return Cmp.LT
    if a.key == b.key:
        return Cmp.EQ
    return Cmp.GT


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    if not a.terms:
        return b
    head_exp, head_coeff = b.terms[0]
    hk = head_exp.key
    out = []
    for exp, coeff in a.terms:
        if exp.key > hk:
            out.append((exp, coeff))
        elif exp.key == hk:
            head_coeff += coeff
            break
        else:
            break
    out.append((head_exp, head_coeff))
    out.extend(b.terms[1:])
    return Ordinal._raw(out)


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    lead_exp, lead_coeff = a.terms[0]
    out = []
    for exp, coeff in b.terms:
        if exp.terms:
            out.append((add(lead_exp, exp), coeff))
        else:
            # finite factor scales only the leading coefficient
            out.append((lead_exp, lead_coeff * coeff))
            out.extend(a.terms[1:])
    return Ordinal._raw(out)


def _split_finite(b: Ordinal):
    """Return ``(limit_part, n)`` with ``b == limit_part + n``."""
    if b.terms and not b.terms[-1][0].terms:
        return Ordinal._raw(b.terms[:-1]), b.terms[-1][1]
    return b, 0


def _div_omega(b: Ordinal) -> Ordinal:
    """The ``d`` with ``omega * d == b``, for ``b`` with no finite part."""
    return Ordinal._raw((sub_left(ONE, e), c) for e, c in b.terms)


def _pow_nat(a: Ordinal, n: int) -> Ordinal:
    result = ONE
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def power(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return ONE
    if not a.terms:
        return ZERO
    if a.key == ONE.key:
        return ONE
    limit_part, n = _split_finite(b)
    if a.is_finite:
        k = a.terms[0][1]
        if not limit_part.terms:
            return nat(k**n)
        # k ** (omega * d) == omega ** d for every natural k >= 2
        return Ordinal._raw(((_div_omega(limit_part), k**n),))
    if not limit_part.terms:
        return _pow_nat(a, n)
    # a ** (omega * d) == omega ** (lead_exp * omega * d) for infinite a
    head = Ordinal._raw(((mul(a.terms[0][0], limit_part), 1),))
    return mul(head, _pow_nat(a, n))


def sub_left(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique ``g`` with ``a + g == b``; requires ``a <= b``."""
    at, bt = a.terms, b.terms
    for i, (ea, ca) in enumerate(at):
        if i >= len(bt):
            raise Underflow(f"{a} > {b}")
        eb, cb = bt[i]
        if ea.key == eb.key:
            if ca == cb:
                continue
            if ca < cb:
                return Ordinal._raw(((eb, cb - ca),) + bt[i + 1 :])
            raise Underflow(f"{a} > {b}")
        if eb.key > ea.key:
            return Ordinal._raw(bt[i:])
        raise Underflow(f"{a} > {b}")
    return Ordinal._raw(bt[len(at) :])


def div_mod(z: Ordinal, a: Ordinal):
    """Left division: the unique ``(q, r)`` with ``z == a*q + r`` and ``r < a``."""
    if not a.terms:
        raise DivisionByZero("division by the zero ordinal")
    lead_exp, lead_coeff = a.terms[0]
    lk = lead_exp.key
    q_terms = []
    low = []
    for exp, coeff in z.terms:
        if exp.key > lk:
            # a * omega**f * n == omega**(lead_exp + f) * n
            q_terms.append((sub_left(lead_exp, exp), coeff))
        else:
            low.append((exp, coeff))
    rest = Ordinal._raw(low)
    m = 0
    if low and low[0][0].key == lk:
        m = low[0][1] // lead_coeff
        if m and mul(a, nat(m)).key > rest.key:
            m -= 1
    if m:
        q_terms.append((ZERO, m))
        rest = sub_left(mul(a, nat(m)), rest)
    return Ordinal._raw(q_terms), rest


def leading(b: Ordinal):
    """Split ``b`` into ``(exponent, coefficient, tail)`` of its head term."""
    if not b.terms:
        raise ZeroOrdinal("zero has no leading term")
    exp, coeff = b.terms[0]
    return exp, coeff, Ordinal._raw(b.terms[1:])


def classify(b: Ordinal):
    """Return ``(Kind, is_finite)``."""
    if not b.terms:
        return Kind.ZERO, True
    kind = Kind.SUCCESSOR if b.is_successor else Kind.LIMIT
    return kind, b.is_finite


def predecessor(b: Ordinal) -> Ordinal:
    if not b.is_successor:
        raise ValueError(f"{b} is not a successor ordinal")
    last_exp, last_coeff = b.terms[-1]
    if last_coeff == 1:
        return Ordinal._raw(b.terms[:-1])
    return Ordinal._raw(b.terms[:-1] + ((last_exp, last_coeff - 1),))
