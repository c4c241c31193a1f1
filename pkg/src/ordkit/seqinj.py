"""Injection of finite sequences over ``beta`` into ``beta``.

With ``J = pairing(beta)``, a sequence ``x`` of length ``n`` is folded as
``f_0 = 0``, ``f_{i+1} = J(f_i, x[i])``, and the code is ``J(n, f_n)``.
Tagging with the length keeps codes of different lengths apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .bij import pairing
from .core import OMEGA, ZERO, Ordinal, nat
from .errors import BoundMismatch, PointOutOfDomain, SequenceTooLong, TooSmall

# decode refuses to unfold more than this many items
MAX_DECODE_LENGTH = 100_000


@dataclass(frozen=True)
class OrdSequence:
    bound: Ordinal
    items: Tuple[Ordinal, ...] = ()

    def __post_init__(self):
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        for x in items:
            if not (isinstance(x, Ordinal) and x < self.bound):
                raise PointOutOfDomain(f"{x} is not below {self.bound}")

    def __len__(self):
        return len(self.items)

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.items) + ")"


def _check_bound(beta: Ordinal):
    if beta < OMEGA:
        raise TooSmall(f"sequence coding needs beta >= w, got {beta}")


def seq_encode(beta: Ordinal, s: OrdSequence) -> Ordinal:
    _check_bound(beta)
    if s.bound != beta:
        raise BoundMismatch(f"sequence bound {s.bound} differs from {beta}")
    J = pairing(beta)
    code = ZERO
    for x in s.items:
        code = J.forward((code, x))
    return J.forward((nat(len(s.items)), code))


def seq_decode(beta: Ordinal, z: Ordinal, max_length: int = MAX_DECODE_LENGTH) -> Optional[OrdSequence]:
    """Invert :func:`seq_encode`; ``None`` when ``z`` is not a code."""
    _check_bound(beta)
    if not (isinstance(z, Ordinal) and z < beta):
        raise PointOutOfDomain(f"{z} is not below {beta}")
    J = pairing(beta)
    length, v = J.backward(z)
    if not length.is_finite:
        return None
    n = int(length)
    if n > max_length:
        raise SequenceTooLong(f"code {z} claims {n} items (limit {max_length})")
    items = []
    for _ in range(n):
        v, x = J.backward(v)
        items.append(x)
    if v:
        return None
    s = OrdSequence(beta, tuple(reversed(items)))
    if seq_encode(beta, s) != z:
        return None
    return s
