"""The ten acceptance criteria, each printing one PASS/FAIL line.

Run with ``pytest -v tests/test_acceptance.py``; the lines are written straight
to the terminal so they survive output capturing.
"""

import itertools
import os
import random
import time
from fractions import Fraction

import pytest

from gghecke.criterion import SweepConfig, criterion_sweep
from gghecke.cyclo import field
from gghecke.gha_a import kr_set, principal_series_A
from gghecke.psmod import (CChar, delta_characters, e1_as_gha, principal_series, random_character,
                           weights)
from gghecke.refl_group import all_chars, all_perms, sort_char
from gghecke.simplicity import is_simple
from gghecke import suites

JOBS = max(1, min(8, os.cpu_count() or 1))


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail, started):
        with capsys.disabled():
            print(f"\ncriterion {k}: {'PASS' if ok else 'FAIL'}  {detail}  [{time.time() - started:.1f}s]")
    return emit


def _failed(checks):
    return [c.label for c in checks if not c.passed]


@pytest.fixture(scope="module")
def sweep_c():
    return criterion_sweep(SweepConfig(2, 3, "1", "-2..2", "all-orbits", lengths=True, jobs=JOBS))


def test_criterion_1_commutation(report):
    t0 = time.time()
    rng = random.Random(2024)
    bad, total = [], 0
    for r, n in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        for _ in range(5):
            checks = suites.relations_suite(suites.random_params(r, n, rng))
            total += len(checks)
            bad += [(r, n, x) for x in _failed(checks)]
    report(1, not bad, f"{total} identities, {len(bad)} failures", t0)
    assert not bad


def test_criterion_2_pbw(report):
    t0 = time.time()
    bad, total = [], 0
    for r, n in itertools.product((2, 3, 4), (2, 3)):
        checks = suites.pbw_suite(r, n, field(r).const(Fraction(1, 2)), 200, seed=r * 10 + n, max_deg=3)
        total += len(checks)
        bad += [(r, n, x) for x in _failed(checks)]
    report(2, not bad, f"200 triples x 2 algebras x 6 (r,n); {len(bad)} failing checks", t0)
    assert not bad


def test_criterion_3_realization(report):
    t0 = time.time()
    rng = random.Random(3)
    bad = []
    for r, n in [(2, 3), (3, 2), (3, 3)]:
        bad += [(r, n, x) for x in _failed(suites.realization_suite(suites.random_params(r, n, rng)))]
    report(3, not bad, f"{len(bad)} structure-constant mismatches", t0)
    assert not bad


def test_criterion_4_center(report):
    t0 = time.time()
    bad, total = [], 0
    for r, n in itertools.product((2, 3), (1, 2, 3)):
        checks = suites.center_suite(r, n, field(r).const(Fraction(2, 3)))
        total += len(checks)
        bad += [(r, n, x) for x in _failed(checks)]
    report(4, not bad, f"{total} checks (central products and non-central D1, theta1)", t0)
    assert not bad


def test_criterion_5_weights(report):
    t0 = time.time()
    rng = random.Random(5)
    bad = 0
    for r, n in itertools.product((1, 2, 3), (1, 2, 3)):
        for _ in range(20):
            chi = random_character(r, n, rng)
            got = {}
            for c, m in weights(principal_series(chi, 1)):
                got[c] = got.get(c, 0) + m
            expect = {}
            for w in all_perms(n):
                c = chi.twist(w)
                expect[c] = expect.get(c, 0) + 1
            bad += got != expect
    report(5, not bad, f"180 modules, {bad} weight-multiset mismatches", t0)
    assert not bad


def test_criterion_6_sweeps(report, sweep_c):
    t0 = time.time()
    runs = {
        "a": criterion_sweep(SweepConfig(2, 2, "1", "-3..3", jobs=JOBS)),
        "b1": criterion_sweep(SweepConfig(3, 2, "1", "-3..3", jobs=JOBS)),
        "b1/2": criterion_sweep(SweepConfig(3, 2, "1/2", "-3/2..3/2:1/2", jobs=JOBS)),
        "c": sweep_c,
    }
    parts, ok = [], True
    for name, res in runs.items():
        c = res.counts()
        parts.append(f"({name}) {c['agree']}/{c['points']} agree, {c['reducible']} reducible, {c['refused']} refused")
        ok &= c["disagree"] == 0 and c["refused"] == 0 and c["agree"] == c["points"]
    # the k=1/2 grid must contain the exact boundary differences +-3/2
    ok &= runs["b1/2"].counts()["reducible"] > 0
    report(6, ok, "; ".join(parts), t0)
    assert ok


def test_criterion_7_lengths(report, sweep_c):
    t0 = time.time()
    red = [x for x in sweep_c.rows if x.oracle == "reducible"]
    bad = [x for x in red if not len(x.factors) == len(x.e1_factors) == len(x.type_a_factors)]
    hist = {}
    for x in red:
        hist[len(x.factors)] = hist.get(len(x.factors), 0) + 1
    report(7, bool(red) and not bad, f"{len(red)} reducible instances, {len(bad)} length mismatches, "
           f"lengths {dict(sorted(hist.items()))}", t0)
    assert red and not bad


def test_criterion_8_type_a_reduction(report):
    t0 = time.time()
    grid = range(-2, 3)
    count = bad = 0
    for varpi in all_chars(2, 3):
        if not varpi.is_sorted():
            continue
        sc = sort_char(varpi)
        for nu in itertools.product(grid, repeat=3):
            M = principal_series(CChar(nu, varpi), 1)
            A = principal_series_A(nu, sc.blocks, 2, 2)
            count += 1
            bad += e1_as_gha(M).gens != A.gens
    report(8, count > 0 and not bad, f"{count} sorted instances, {bad} entrywise mismatches", t0)
    assert count and not bad


def test_criterion_9_duality(report):
    t0 = time.time()
    bad, total = [], 0
    for r, n in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]:
        checks = suites.duality_suite(r, n, field(r).const(Fraction(1, 2)), 10, seed=r + 7 * n)
        total += len(checks)
        bad += [(r, n, x) for x in _failed(checks)]
    # search all T-characters for the one matching the delta-twist
    rng = random.Random(9)
    found = set()
    for r, n in [(2, 2), (3, 2), (4, 2), (3, 3)]:
        chi = random_character(r, n, rng)
        mus = delta_characters(chi, field(r).const(Fraction(1, 2)))
        if len(mus) != 1:
            bad.append((r, n, f"delta-twist matches {len(mus)} characters"))
            continue
        found.add("det.mu" if mus[0] == chi.mu.times_det() else
                  "mu" if mus[0] == chi.mu else f"other {mus[0].index} for {chi.mu.index}")
    report(9, not bad, f"{total} isomorphism checks over 50 instances; delta-twist character "
           f"mu' = {', '.join(sorted(found))}; {len(bad)} failures", t0)
    assert not bad


def test_criterion_10_kr(report):
    t0 = time.time()
    count = bad = 0
    cases = [(None, 2, range(-3, 4)), (((0, 1), (2,)), 3, range(-3, 4)), (None, 3, range(-3, 4))]
    for blocks, n, grid in cases:
        for lam in itertools.product(grid, repeat=n):
            for c in (1, 2):
                count += 1
                bad += is_simple(principal_series_A(lam, blocks, c)).simple != (not kr_set(lam, blocks, c))
    report(10, not bad, f"{count} type-A modules (blocks of size 2 and 3), {bad} disagreements", t0)
    assert not bad
