"""Constructive ordinal arithmetic below epsilon-zero.

Cantor normal form arithmetic, explicit invertible bijections between
ordinals (sum and product commutation, the collapse of an ordinal onto
its leading power, a canonical pairing ``beta x beta -> beta``), and an
injection of finite sequences over ``beta`` into ``beta``.
"""

from .bij import (
    add_commute,
    cantor_nat,
    cnf_head,
    compose,
    index_swap,
    invert,
    mul_commute,
    mul_split,
    omega_sq_collapse,
    pairing,
)
from .core import (
    OMEGA,
    ONE,
    ZERO,
    Cmp,
    Kind,
    Ordinal,
    add,
    classify,
    compare,
    div_mod,
    leading,
    make,
    mul,
    nat,
    omega_power,
    power,
    sub_left,
)
from .finsupp import FinSuppFn, cnf_eval, cnf_inv, lift_index, lift_value
from .seqinj import OrdSequence, seq_decode, seq_encode
from .syntax import from_json, parse, parse_ordinal, print_canonical, to_json

__version__ = "0.1.0"
