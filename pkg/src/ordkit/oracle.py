"""Seeded samplers and the differential / property harness.

``run_differential`` checks ``core`` arithmetic against the independent
vector engine in :mod:`ordkit.poly`. ``run_property_suite`` runs every
algebraic and bijection property the package promises. Both return a
:class:`Report`; failures are data, never exceptions.

Mutants in :data:`MUTANTS` swap in deliberately broken operations so the
harness can be shown to catch them.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, List, NamedTuple, Optional, Sequence

from . import core
from .bij import (
    Fun,
    Ord,
    Prod,
    add_commute,
    cantor_nat,
    cnf_head,
    format_point,
    index_swap,
    invert,
    mul_commute,
    mul_split,
    omega_sq_collapse,
    pairing,
)
from .core import OMEGA, ONE, TWO, ZERO, Cmp, Ordinal, nat, omega_power
from .errors import CastUnequal, EmptyPool
from .finsupp import FinSuppFn, cnf_eval, cnf_inv, lift_index, lift_value
from .poly import from_poly, poly_add, poly_cmp, poly_mul, to_poly
from .seqinj import OrdSequence, seq_decode, seq_encode

W = OMEGA
W2 = core.power(OMEGA, TWO)

CNF_BASES = (nat(2), nat(5), W, W2)
CNF_BOUNDS = (W, core.add(core.mul(W, TWO), nat(3)), W2)
HEAD_BETAS = (
    W,
    core.add(core.mul(W, TWO), nat(3)),
    core.Ordinal([(2, 4), (1, 2), (0, 1)]),
    core.Ordinal([(W, 3), (1, 2), (0, 1)]),
)
PAIRING_BETAS = (
    W,
    core.add(core.mul(W, TWO), nat(3)),
    W2,
    omega_power(W),
    core.Ordinal([(W, 3), (1, 2), (0, 1)]),
)
SEQ_BETAS = (W, W2)


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    count: int = 1000
    exponent_pool: Sequence = (0, 1, 2, 3, 4)
    max_coefficient: int = 20
    max_terms: int = 5

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.max_coefficient < 1:
            raise ValueError("max_coefficient must be at least 1")
        if self.max_terms < 0:
            raise ValueError("max_terms must be non-negative")
        object.__setattr__(self, "exponent_pool", tuple(core._coerce_strict(e) for e in self.exponent_pool))

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


# -- sampling ----------------------------------------------------------------


def sample_ordinal(cfg: SampleConfig, rng: Optional[random.Random] = None) -> Ordinal:
    """Random CNF with exponents drawn from ``cfg.exponent_pool``."""
    if not cfg.exponent_pool:
        raise EmptyPool("exponent pool is empty")
    if rng is None:
        rng = cfg.rng()
    k = rng.randint(0, cfg.max_terms)
    chosen = {rng.choice(cfg.exponent_pool) for _ in range(k)}
    exps = sorted(chosen, key=lambda e: e.key, reverse=True)
    return Ordinal._raw((e, rng.randint(1, cfg.max_coefficient)) for e in exps)


def _below_power(e: Ordinal, rng, max_terms, max_coeff) -> Ordinal:
    """Random ordinal below ``omega ** e``."""
    if not e:
        return ZERO
    k = rng.randint(0, max_terms)
    exps = {sample_below(e, rng, max_terms, max_coeff, edge_prob=0.2) for _ in range(k)}
    exps = sorted(exps, key=lambda x: x.key, reverse=True)
    return Ordinal._raw((x, rng.randint(1, max_coeff)) for x in exps)


def _edge_points(bound: Ordinal):
    pts = [p for p in (ZERO, ONE, W) if p < bound]
    x = bound
    for _ in range(2):
        if not x.is_successor:
            break
        x = core.predecessor(x)
        pts.append(x)
    return pts


def sample_below(bound: Ordinal, rng: random.Random, max_terms: int = 3, max_coeff: int = 20, edge_prob: float = 0.1) -> Ordinal:
    """Random ordinal below ``bound`` by CNF-digit sampling.

    Picks a term position, lowers that coefficient, and fills in a random
    tail below the term's power. Edge points (0, 1, w, and the immediate
    predecessors of ``bound``) are forced with probability ``edge_prob``.
    """
    if not bound:
        raise ValueError("nothing lies below 0")
    if rng.random() < edge_prob:
        return rng.choice(_edge_points(bound))
    terms = bound.terms
    i = rng.randrange(len(terms))
    e, c = terms[i]
    lowered = rng.randrange(c)
    head = terms[:i] + (((e, lowered),) if lowered else ())
    tail = _below_power(e, rng, max_terms, max_coeff)
    out = Ordinal._raw(head + tail.terms)
    if not out < bound:
        raise AssertionError(f"sampler produced {out} >= {bound}")
    return out


def sample_point(d, cfg: SampleConfig, rng: Optional[random.Random] = None):
    """Random point of a bijection domain."""
    if rng is None:
        rng = cfg.rng()
    if isinstance(d, Ord):
        return sample_below(d.bound, rng, cfg.max_terms, cfg.max_coefficient)
    if isinstance(d, Prod):
        return (sample_point(d.left, cfg, rng), sample_point(d.right, cfg, rng))
    if isinstance(d, Fun):
        return sample_fin_supp(d.base, d.index_bound, cfg, rng)
    raise TypeError(f"unknown domain {d!r}")


def sample_fin_supp(base: Ordinal, index_bound: Ordinal, cfg: SampleConfig, rng: random.Random) -> FinSuppFn:
    mapping = {}
    if index_bound and base > ONE:
        for _ in range(rng.randint(0, cfg.max_terms)):
            idx = sample_below(index_bound, rng, cfg.max_terms, cfg.max_coefficient)
            val = sample_below(base, rng, cfg.max_terms, cfg.max_coefficient)
            mapping[idx] = val
    return FinSuppFn.from_mapping(base, index_bound, mapping)


def sample_sequence(beta: Ordinal, max_len: int, cfg: SampleConfig, rng: random.Random) -> OrdSequence:
    n = rng.randint(0, max_len)
    return OrdSequence(beta, tuple(sample_below(beta, rng, cfg.max_terms, cfg.max_coefficient) for _ in range(n)))


# -- reports -----------------------------------------------------------------


@dataclass
class PropertyResult:
    name: str
    samples: int = 0
    failures: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.samples > 0

    def record(self, problem: Optional[str]):
        self.samples += 1
        if problem is not None:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = problem


@dataclass
class Report:
    results: List[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def extend(self, other: "Report"):
        self.results.extend(other.results)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name} samples={r.samples} failures={r.failures}"
            if r.counterexample is not None:
                line += f" counterexample: {r.counterexample}"
            lines.append(line)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "properties": [
                {
                    "name": r.name,
                    "samples": r.samples,
                    "failures": r.failures,
                    "counterexample": r.counterexample,
                }
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _check(result: PropertyResult, fn: Callable, *args):
    """Run one sample, turning unexpected exceptions into failures."""
    try:
        problem = fn(*args)
    except Exception as exc:  # noqa: BLE001 - failures are data
        problem = f"{type(exc).__name__}: {exc}"
    result.record(problem)


# -- differential check ------------------------------------------------------


class Ops(NamedTuple):
    add: Callable
    mul: Callable
    compare: Callable


CORE_OPS = Ops(core.add, core.mul, core.compare)


def broken_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Addition that forgets absorption: merges terms like a natural sum."""
    merged = {}
    for e, c in a.terms + b.terms:
        merged[e] = merged.get(e, 0) + c
    return Ordinal._raw(sorted(merged.items(), key=lambda t: t[0].key, reverse=True))


MUTANTS = {"broken-add": CORE_OPS._replace(add=broken_add)}

DIFFERENTIAL_CONFIG = SampleConfig(seed=0, count=10_000, exponent_pool=(0, 1, 2, 3, 4), max_coefficient=20, max_terms=5)


def run_differential(cfg: SampleConfig = DIFFERENTIAL_CONFIG, ops: Ops = CORE_OPS) -> Report:
    """Compare add/mul/compare with the vector oracle on ``cfg.count`` pairs."""
    rng = cfg.rng("differential")
    res = {name: PropertyResult(f"differential.{name}") for name in ("add", "mul", "compare")}

    def check_add(a, b, pa, pb):
        got, want = ops.add(a, b), from_poly(poly_add(pa, pb))
        return None if got == want else f"add({a}, {b}) = {got}, oracle {want}"

    def check_mul(a, b, pa, pb):
        got, want = ops.mul(a, b), from_poly(poly_mul(pa, pb))
        return None if got == want else f"mul({a}, {b}) = {got}, oracle {want}"

    def check_cmp(a, b, pa, pb):
        got, want = ops.compare(a, b), poly_cmp(pa, pb)
        return None if got == want else f"compare({a}, {b}) = {got}, oracle {want}"

    for _ in range(cfg.count):
        a = sample_ordinal(cfg, rng)
        b = sample_ordinal(cfg, rng)
        pa, pb = to_poly(a), to_poly(b)
        _check(res["add"], check_add, a, b, pa, pb)
        _check(res["mul"], check_mul, a, b, pa, pb)
        _check(res["compare"], check_cmp, a, b, pa, pb)
    return Report(list(res.values()))


# -- ord_core properties -----------------------------------------------------

LAW_CONFIG = SampleConfig(seed=0, count=1000, exponent_pool=(0, 1, 2, 3), max_coefficient=9, max_terms=3)
DEEP_POOL = (0, 1, 2, W, core.add(W, ONE), W2, omega_power(W))


def _fmt(*xs) -> str:
    return ", ".join(format_point(x) for x in xs)


def check_total_order(a, b, c) -> Optional[str]:
    cmp = core.compare
    for x, y in itertools.permutations((a, b, c), 2):
        r, s = cmp(x, y), cmp(y, x)
        if (r is Cmp.EQ) != (x.key == y.key) or (r is Cmp.EQ) != (s is Cmp.EQ):
            return f"trichotomy fails on {_fmt(x, y)}"
        if r is not Cmp.EQ and r == s:
            return f"antisymmetry fails on {_fmt(x, y)}"
    for x, y, z in itertools.permutations((a, b, c)):
        if cmp(x, y) is Cmp.LT and cmp(y, z) is Cmp.LT and cmp(x, z) is not Cmp.LT:
            return f"transitivity fails on {_fmt(x, y, z)}"
        if cmp(x, y) is not Cmp.GT and cmp(y, z) is not Cmp.GT and cmp(x, z) is Cmp.GT:
            return f"weak transitivity fails on {_fmt(x, y, z)}"
    return None


def check_add_monoid(a, b, c):
    if core.add(core.add(a, b), c) != core.add(a, core.add(b, c)):
        return f"add not associative on {_fmt(a, b, c)}"
    if core.add(ZERO, a) != a or core.add(a, ZERO) != a:
        return f"0 is not an identity for {a}"
    return None


def check_add_monotone(a, b, c):
    if b < c and not core.add(a, b) < core.add(a, c):
        return f"strict right monotonicity fails on {_fmt(a, b, c)}"
    if a <= b and not core.add(a, c) <= core.add(b, c):
        return f"weak left monotonicity fails on {_fmt(a, b, c)}"
    return None


def check_mul_laws(a, b, c):
    if core.mul(core.mul(a, b), c) != core.mul(a, core.mul(b, c)):
        return f"mul not associative on {_fmt(a, b, c)}"
    if core.mul(a, core.add(b, c)) != core.add(core.mul(a, b), core.mul(a, c)):
        return f"left distributivity fails on {_fmt(a, b, c)}"
    return None


def check_exponent_laws(a, b, c):
    if not a:
        return None
    p = core.power
    if p(a, core.add(b, c)) != core.mul(p(a, b), p(a, c)):
        return f"a^(b+c) != a^b * a^c on {_fmt(a, b, c)}"
    if p(p(a, b), c) != p(a, core.mul(b, c)):
        return f"(a^b)^c != a^(b*c) on {_fmt(a, b, c)}"
    return None


def check_tail_absorption(rho, exp, k):
    head = core.mul(omega_power(exp), nat(k))
    if core.add(rho, head) != head:
        return f"{rho} + {head} is not {head}"
    return None


def check_coefficient_absorption(k, gamma):
    pw = omega_power(gamma)
    if core.mul(nat(k), pw) != pw:
        return f"{k} * {pw} is not {pw}"
    return None


def check_reconstruction(z, a):
    if a:
        q, r = core.div_mod(z, a)
        if core.add(core.mul(a, q), r) != z or not r < a:
            return f"divmod({z}, {a}) = ({q}, {r}) does not reconstruct"
    lo, hi = (z, a) if z <= a else (a, z)
    g = core.sub_left(lo, hi)
    if core.add(lo, g) != hi:
        return f"sub_left({lo}, {hi}) = {g} does not reconstruct"
    return None


def run_ord_core_suite(cfg: SampleConfig = LAW_CONFIG) -> Report:
    rng = cfg.rng("ord_core")
    deep = SampleConfig(cfg.seed, cfg.count, DEEP_POOL, cfg.max_coefficient, cfg.max_terms)
    names = [
        "ord_core.total_order",
        "ord_core.add_monoid",
        "ord_core.add_monotone",
        "ord_core.mul_laws",
        "ord_core.exponent_laws",
        "ord_core.tail_absorption",
        "ord_core.coefficient_absorption",
        "ord_core.reconstruction",
    ]
    res = {n: PropertyResult(n) for n in names}
    for _ in range(cfg.count):
        a, b, c = (sample_ordinal(cfg, rng) for _ in range(3))
        da, db, dc = (sample_ordinal(deep, rng) for _ in range(3))
        _check(res["ord_core.total_order"], check_total_order, da, db, dc)
        _check(res["ord_core.add_monoid"], check_add_monoid, da, db, dc)
        _check(res["ord_core.add_monotone"], check_add_monotone, da, db, dc)
        _check(res["ord_core.mul_laws"], check_mul_laws, a, b, c)
        _check(res["ord_core.exponent_laws"], check_exponent_laws, a, b, c)
        exp = sample_ordinal(deep, rng)
        rho = _below_power(exp, rng, cfg.max_terms, cfg.max_coefficient)
        _check(res["ord_core.tail_absorption"], check_tail_absorption, rho, exp, rng.randint(1, 20))
        gamma = sample_ordinal(deep, rng) or ONE
        _check(res["ord_core.coefficient_absorption"], check_coefficient_absorption, rng.randint(1, 20), gamma)
        _check(res["ord_core.reconstruction"], check_reconstruction, da, db)
    return Report(list(res.values()))


# -- fin_support properties --------------------------------------------------


def check_cnf_from_function(f: FinSuppFn):
    z = cnf_eval(f)
    if not z < core.power(f.base, f.index_bound):
        return f"cnf_eval({f}) = {z} is not below {f.base}^({f.index_bound})"
    back = cnf_inv(f.base, f.index_bound, z)
    if back != f:
        return f"cnf_inv(cnf_eval({f})) = {back}"
    return None


def check_cnf_from_ordinal(alpha, beta, z):
    f = cnf_inv(alpha, beta, z)
    if cnf_eval(f) != z:
        return f"cnf_eval(cnf_inv({alpha}, {beta}, {z})) = {cnf_eval(f)}"
    return None


def run_cnf_round_trips(cfg: SampleConfig, bases=CNF_BASES, bounds=CNF_BOUNDS) -> Report:
    rng = cfg.rng("cnf")
    report = Report()
    for alpha in bases:
        for beta in bounds:
            fwd = PropertyResult(f"fin_support.inv_eval[{alpha}; {beta}]")
            bwd = PropertyResult(f"fin_support.eval_inv[{alpha}; {beta}]")
            top = core.power(alpha, beta)
            for _ in range(cfg.count):
                _check(fwd, check_cnf_from_function, sample_fin_supp(alpha, beta, cfg, rng))
                _check(bwd, check_cnf_from_ordinal, alpha, beta, sample_below(top, rng, cfg.max_terms, cfg.max_coefficient))
            report.results += [fwd, bwd]
    return report


def run_lift_round_trips(cfg: SampleConfig) -> Report:
    rng = cfg.rng("lift")
    idx = PropertyResult("fin_support.lift_index_round_trip")
    val = PropertyResult("fin_support.lift_value_round_trip")
    gammas = (nat(3), W, core.add(W, TWO), W2)
    collapse = omega_sq_collapse()

    def idx_case(iota, f):
        g = lift_index(iota, f)
        if len(g.entries) != len(f.entries):
            return f"lift_index changed the support size of {f}"
        back = lift_index(invert(iota), g)
        return None if back == f else f"lift_index round trip {f} -> {g} -> {back}"

    def val_case(f):
        g = lift_value(collapse, f)
        back = lift_value(invert(collapse), g)
        return None if back == f else f"lift_value round trip {f} -> {g} -> {back}"

    for i in range(cfg.count):
        gamma = gammas[i % len(gammas)]
        iota = index_swap(gamma)
        _check(idx, idx_case, iota, sample_fin_supp(W, core.mul(gamma, TWO), cfg, rng))
        _check(val, val_case, sample_fin_supp(W2, gamma, cfg, rng))
    return Report([idx, val])


# -- bij properties ----------------------------------------------------------


def check_round_trip(f, x, y):
    fx = f.forward(x)
    if fx not in f.codomain:
        return f"forward({format_point(x)}) = {format_point(fx)} escapes {f.codomain}"
    if f.backward(fx) != x:
        return f"backward(forward({format_point(x)})) = {format_point(f.backward(fx))}"
    by = f.backward(y)
    if by not in f.domain:
        return f"backward({format_point(y)}) = {format_point(by)} escapes {f.domain}"
    if f.forward(by) != y:
        return f"forward(backward({format_point(y)})) = {format_point(f.forward(by))}"
    return None


def random_bijections(rng: random.Random):
    """One instance of each parameterised constructor, parameters drawn at random."""
    small = SampleConfig(0, 1, DEEP_POOL, 5, 3)

    def nonzero():
        return sample_ordinal(small, rng) or ONE

    return [
        ("add_commute", add_commute(sample_ordinal(small, rng), nonzero())),
        ("mul_split", mul_split(nonzero(), nonzero())),
        ("mul_commute", mul_commute(nonzero(), nonzero())),
        ("index_swap", index_swap(nonzero())),
    ]


def fixed_bijections():
    out = [("cantor_nat", cantor_nat()), ("omega_sq_collapse", omega_sq_collapse())]
    out += [(f"cnf_head[{b}]", cnf_head(b)) for b in HEAD_BETAS]
    return out


def run_bijection_round_trips(cfg: SampleConfig, per_instance: int = 50) -> Report:
    """Round trips for every constructor; pairing is covered by run_pairing_checks."""
    rng = cfg.rng("bij")
    res = {}
    for _ in range(max(1, cfg.count // per_instance)):
        for name, f in random_bijections(rng):
            r = res.setdefault(name, PropertyResult(f"bij.round_trip[{name}]"))
            for _ in range(per_instance):
                _check(r, check_round_trip, f, sample_point(f.domain, cfg, rng), sample_point(f.codomain, cfg, rng))
    for name, f in fixed_bijections():
        r = res.setdefault(name, PropertyResult(f"bij.round_trip[{name}]"))
        for _ in range(cfg.count):
            _check(r, check_round_trip, f, sample_point(f.domain, cfg, rng), sample_point(f.codomain, cfg, rng))
    return Report(list(res.values()))


def check_head_codomain(beta):
    e = cnf_head(beta)
    want = Ord(omega_power(core.leading(beta)[0]))
    if e.codomain != want or e.codomain.bound.key != want.bound.key:
        return f"cnf_head({beta}) has codomain {e.codomain}, expected {want}"
    return None


def check_no_cast_errors(beta):
    try:
        cnf_head(beta)
        pairing(beta)
    except CastUnequal as exc:
        return f"CastUnequal building chains for {beta}: {exc}"
    return None


def run_pairing_checks(cfg: SampleConfig, betas=PAIRING_BETAS) -> Report:
    rng = cfg.rng("pairing")
    report = Report()
    for beta in betas:
        J = pairing(beta)
        rt = PropertyResult(f"bij.pairing_round_trip[{beta}]")
        inj = PropertyResult(f"bij.pairing_injective[{beta}]")
        seen = {}
        for _ in range(cfg.count):
            x = sample_point(J.domain, cfg, rng)
            y = sample_point(J.codomain, cfg, rng)
            _check(rt, check_round_trip, J, x, y)
            z = J.forward(x)
            prev = seen.setdefault(z, x)
            inj.record(None if prev == x else f"pairing({beta}) sends {format_point(prev)} and {format_point(x)} to {z}")
        report.results += [rt, inj]
    ex = PropertyResult("bij.pairing_exhaustive[w; 50x50]")
    J = pairing(W)
    codes = {}
    for m in range(50):
        for n in range(50):
            z = J.forward((nat(m), nat(n)))
            prev = codes.setdefault(z, (m, n))
            ex.record(None if prev == (m, n) else f"pairing(w) sends {prev} and {(m, n)} to {z}")
    report.results.append(ex)
    return report


def run_bij_suite(cfg: SampleConfig) -> Report:
    report = run_bijection_round_trips(cfg)
    heads = PropertyResult("bij.cnf_head_codomain")
    casts = PropertyResult("bij.no_cast_unequal")
    for beta in HEAD_BETAS + PAIRING_BETAS:
        _check(heads, check_head_codomain, beta)
        _check(casts, check_no_cast_errors, beta)
    report.results += [heads, casts]
    report.extend(run_pairing_checks(cfg))
    return report


# -- seq_inj properties ------------------------------------------------------


def run_seq_suite(cfg: SampleConfig, betas=SEQ_BETAS, max_len: int = 6) -> Report:
    rng = cfg.rng("seq")
    report = Report()
    for beta in betas:
        rt = PropertyResult(f"seq_inj.round_trip[{beta}]")
        rng_ok = PropertyResult(f"seq_inj.range[{beta}]")
        inj = PropertyResult(f"seq_inj.injective[{beta}]")
        sound = PropertyResult(f"seq_inj.decode_sound[{beta}]")
        seen = {}
        for _ in range(cfg.count):
            s = sample_sequence(beta, max_len, cfg, rng)
            z = seq_encode(beta, s)
            rng_ok.record(None if z < beta else f"code {z} of {s} is not below {beta}")
            back = seq_decode(beta, z)
            rt.record(None if back == s else f"decode(encode({s})) = {back}")
            prev = seen.setdefault(z, s)
            inj.record(None if prev == s else f"{prev} and {s} share code {z}")

            def soundness(z):
                d = seq_decode(beta, z)
                if d is not None and seq_encode(beta, d) != z:
                    return f"decode({z}) = {d} re-encodes differently"
                return None

            _check(sound, soundness, sample_below(beta, rng, cfg.max_terms, cfg.max_coefficient))
        report.results += [rt, rng_ok, inj, sound]
    return report


def run_property_suite(cfg: SampleConfig = LAW_CONFIG, ops: Ops = CORE_OPS) -> Report:
    """Every property of ord_core, fin_support, bij and seq_inj.

    ``ops`` only affects the differential section (mutation testing).
    """
    report = Report()
    report.extend(run_differential(SampleConfig(cfg.seed, cfg.count, (0, 1, 2, 3, 4), 20, 5), ops))
    report.extend(run_ord_core_suite(cfg))
    report.extend(run_cnf_round_trips(cfg))
    report.extend(run_lift_round_trips(cfg))
    report.extend(run_bij_suite(cfg))
    report.extend(run_seq_suite(cfg))
    return report
