"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also collected into an "acceptance criteria" section of the summary.
"""

import time

import pytest

from ordkit.bij import cnf_head
from ordkit.cli import EXIT_DOMAIN, EXIT_OK, EXIT_SELFTEST, EXIT_SYNTAX, main
from ordkit.core import OMEGA, ONE, Ordinal, add, mul, omega_power, power
from ordkit.oracle import (
    CNF_BASES,
    CNF_BOUNDS,
    DEEP_POOL,
    DIFFERENTIAL_CONFIG,
    HEAD_BETAS,
    LAW_CONFIG,
    MUTANTS,
    PAIRING_BETAS,
    SEQ_BETAS,
    PropertyResult,
    Report,
    SampleConfig,
    _below_power,
    _check,
    check_add_monoid,
    check_coefficient_absorption,
    check_exponent_laws,
    check_head_codomain,
    check_mul_laws,
    check_no_cast_errors,
    check_round_trip,
    check_tail_absorption,
    check_total_order,
    run_cnf_round_trips,
    run_differential,
    run_pairing_checks,
    run_seq_suite,
    sample_ordinal,
    sample_point,
)
from ordkit.syntax import from_json, parse, print_canonical, eval_expr, to_json

N = 1000


def verdict(acceptance_line, label, ok, detail):
    acceptance_line(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
    return ok


def failures(report: Report) -> str:
    bad = [r for r in report.results if not r.passed]
    return "; ".join(f"{r.name}: {r.counterexample}" for r in bad[:3])


def test_ac01_differential_arithmetic(acceptance_line):
    t0 = time.perf_counter()
    report = run_differential(DIFFERENTIAL_CONFIG)
    elapsed = time.perf_counter() - t0
    mismatches = sum(r.failures for r in report.results)
    ok = report.passed and elapsed < 5.0 and all(r.samples == 10_000 for r in report.results)
    assert verdict(
        acceptance_line, "AC1 differential arithmetic", ok,
        f"10000 pairs below w^5, {mismatches} mismatches, {elapsed:.2f}s (limit 5s)",
    ), failures(report)


def test_ac02_algebraic_laws(acceptance_line):
    rng = LAW_CONFIG.rng("acceptance-laws")
    res = [PropertyResult(n) for n in ("add_assoc", "mul_laws", "exponent_laws")]
    for _ in range(N):
        a, b, c = (sample_ordinal(LAW_CONFIG, rng) for _ in range(3))
        assert max(a, b, c) < omega_power(OMEGA)
        _check(res[0], check_add_monoid, a, b, c)
        _check(res[1], check_mul_laws, a, b, c)
        _check(res[2], check_exponent_laws, a, b, c)
    report = Report(res)
    ok = report.passed
    assert verdict(
        acceptance_line, "AC2 algebraic laws", ok,
        f"{N} triples below w^w, {sum(r.failures for r in res)} violations",
    ), failures(report)


def test_ac03_absorption(acceptance_line):
    cfg = SampleConfig(seed=3, count=N, exponent_pool=DEEP_POOL, max_coefficient=9, max_terms=3)
    rng = cfg.rng("acceptance-absorption")
    tail = PropertyResult("tail_absorption")
    coeff = PropertyResult("coefficient_absorption")
    for _ in range(N):
        exp = sample_ordinal(cfg, rng)
        rho = _below_power(exp, rng, cfg.max_terms, cfg.max_coefficient)
        _check(tail, check_tail_absorption, rho, exp, rng.randint(1, 20))
        gamma = sample_ordinal(cfg, rng) or ONE
        _check(coeff, check_coefficient_absorption, rng.randint(1, 20), gamma)
    report = Report([tail, coeff])
    assert verdict(
        acceptance_line, "AC3 absorption identities", report.passed,
        f"{N} samples each, {tail.failures + coeff.failures} violations",
    ), failures(report)


def test_ac04_cnf_bijection(acceptance_line):
    cfg = SampleConfig(seed=4, count=N, exponent_pool=(0, 1, 2), max_coefficient=20, max_terms=3)
    t0 = time.perf_counter()
    report = run_cnf_round_trips(cfg, CNF_BASES, CNF_BOUNDS)
    elapsed = time.perf_counter() - t0
    combos = len(CNF_BASES) * len(CNF_BOUNDS)
    ok = report.passed and elapsed < 10.0 and len(report.results) == 2 * combos
    ok = ok and all(r.samples == N for r in report.results)
    assert verdict(
        acceptance_line, "AC4 CNF bijection", ok,
        f"{combos} (base, bound) pairs x {N} round trips each way, "
        f"{sum(r.failures for r in report.results)} failures, {elapsed:.2f}s (limit 10s)",
    ), failures(report)


def test_ac05_cnf_head(acceptance_line):
    cfg = SampleConfig(seed=5, count=N)
    rng = cfg.rng("acceptance-head")
    res = []
    for beta in HEAD_BETAS:
        shape = PropertyResult(f"codomain[{beta}]")
        _check(shape, check_head_codomain, beta)
        _check(shape, check_no_cast_errors, beta)
        rt = PropertyResult(f"round_trip[{beta}]")
        e = cnf_head(beta)
        for _ in range(N):
            _check(rt, check_round_trip, e, sample_point(e.domain, cfg, rng), sample_point(e.codomain, cfg, rng))
        res += [shape, rt]
    report = Report(res)
    assert verdict(
        acceptance_line, "AC5 cnf_head collapse", report.passed,
        f"{len(HEAD_BETAS)} bounds, codomain w^g, {N} round trips each, "
        f"{sum(r.failures for r in res)} failures",
    ), failures(report)


def test_ac06_pairing(acceptance_line):
    cfg = SampleConfig(seed=6, count=N)
    t0 = time.perf_counter()
    report = run_pairing_checks(cfg, PAIRING_BETAS)
    elapsed = time.perf_counter() - t0
    exhaustive = report["bij.pairing_exhaustive[w; 50x50]"]
    ok = report.passed and elapsed < 30.0 and exhaustive.samples == 2500
    ok = ok and all(r.samples == N for r in report.results if r is not exhaustive)
    assert verdict(
        acceptance_line, "AC6 pairing", ok,
        f"{len(PAIRING_BETAS)} bounds x {N} round trips each way, 2500-point exhaustive check, "
        f"{sum(r.failures for r in report.results)} failures, {elapsed:.2f}s (limit 30s)",
    ), failures(report)


def test_ac07_sequence_injection(acceptance_line):
    cfg = SampleConfig(seed=7, count=N)
    report = run_seq_suite(cfg, SEQ_BETAS, max_len=6)
    ok = report.passed and all(r.samples == N for r in report.results)
    assert verdict(
        acceptance_line, "AC7 sequence injection", ok,
        f"{len(SEQ_BETAS)} bounds x {N} sequences of length <= 6, "
        f"{sum(r.failures for r in report.results)} failures",
    ), failures(report)


def test_ac08_cli_surface(acceptance_line, capsys):
    cfg = SampleConfig(seed=8, count=N, exponent_pool=DEEP_POOL, max_coefficient=10**12, max_terms=4)
    rng = cfg.rng("acceptance-cli")
    text_bad, json_bad = [], []
    for _ in range(N):
        x = sample_ordinal(cfg, rng)
        s = print_canonical(x)
        if print_canonical(eval_expr(parse(s))) != s:
            text_bad.append(s)
        if from_json(to_json(x)) != x:
            json_bad.append(s)

    def code(*argv):
        c = main(list(argv))
        capsys.readouterr()
        return c

    exits = {
        "success": code("norm", "1+w") == EXIT_OK,
        "domain": code("sub", "w", "3") == EXIT_DOMAIN,
        "syntax": code("norm", "w^^2") == EXIT_SYNTAX,
        "usage": code("pair", "w") == EXIT_SYNTAX,
        "selftest": code("selftest", "--samples", "3", "--mutant", "broken-add") == EXIT_SELFTEST,
    }
    ok = not text_bad and not json_bad and all(exits.values())
    assert verdict(
        acceptance_line, "AC8 CLI surface", ok,
        f"{N} canonical strings ({len(text_bad)} mismatches), {N} JSON round trips "
        f"({len(json_bad)} mismatches), exit classes {sorted(k for k, v in exits.items() if v)}",
    ), (text_bad[:3], json_bad[:3], exits)


def test_ac09_mutation_sensitivity(acceptance_line):
    report = run_differential(SampleConfig(seed=9, count=N, exponent_pool=(0, 1, 2, 3, 4), max_coefficient=20, max_terms=5),
                              MUTANTS["broken-add"])
    r = report["differential.add"]
    ok = r.failures > 0 and r.counterexample is not None
    assert verdict(
        acceptance_line, "AC9 mutation sensitivity", ok,
        f"broken add flagged on {r.failures}/{r.samples} samples, first: {r.counterexample}",
    )


def test_ac10_total_order(acceptance_line):
    cfg = SampleConfig(seed=10, count=10_000, exponent_pool=DEEP_POOL, max_coefficient=5, max_terms=3)
    rng = cfg.rng("acceptance-order")
    res = PropertyResult("total_order")
    for _ in range(cfg.count):
        _check(res, check_total_order, *(sample_ordinal(cfg, rng) for _ in range(3)))
    ok = res.passed and res.samples == 10_000
    assert verdict(
        acceptance_line, "AC10 compare total order", ok,
        f"10000 triples, {res.failures} violations",
    ), res.counterexample
