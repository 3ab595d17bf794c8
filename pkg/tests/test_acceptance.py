"""Acceptance suite: one PASS/FAIL line per criterion.

Run with pytest (lines go straight to the terminal) or as a script:
    python tests/test_acceptance.py
"""
from __future__ import annotations

import json
import os
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from pconn import (ArcColoring, CycleOrder, Digraph, balanced_hamiltonian_wc_coloring,  # noqa: E402
                   circulant_bipartite_subdigraph, circulant_pc2_coloring, crossing_digraph,
                   directed_cycle, euler_alternating_coloring, is_bipartite_with,
                   is_properly_connected, is_properly_walk_connected, is_strong, lemma_subcase,
                   make_circulant, pc_number, pc_path_exists, pc_walk_exists, reverse,
                   short_chord_wc_coloring, strong_two_partition_bruteforce,
                   strong_two_partition_construct, tail_side_coloring, wc_number)
from pconn.digraph import is_spanning  # noqa: E402
from pconn.ears import SUBCASES  # noqa: E402
from pconn.errors import PreconditionError, VerificationError  # noqa: E402

from graphgen import (all_strong_digraphs, canonical, random_balanced_hamiltonian,  # noqa: E402
                      random_strong_digraph)

FIXTURES = Path(__file__).parent / "fixtures"

# time limits in seconds, one per criterion
LIMITS = {1: 30.0, 2: 5.0, 3: 5.0, 4: 60.0, 5: 120.0, 6: 120.0, 7: 60.0, 8: 60.0, 9: 120.0}

# criterion 7: random balanced Hamiltonian digraphs on at most this many vertices, this many seeds
AC7_MAX_N, AC7_SEEDS = 7, 50
# criterion 9: exhaustive up to this order; random sample size, orders and arc bound
AC9_EXHAUSTIVE_N, AC9_SAMPLES, AC9_ORDERS = 4, 200, (5, 6)


def ac9_max_arcs(n: int) -> int:
    return 2 * n + 4


# --- criteria ----------------------------------------------------------------------


def criterion_1():
    D = make_circulant(7, [1, 3])
    res = pc_number(D, cap=3)
    fixture = json.loads((FIXTURES / "c7_1_3_pc.json").read_text())
    ok = res.number == 2 and list(res.witness.colors) == fixture["witness"]["colors"]
    ok = ok and is_properly_connected(D, res.witness).ok
    return ok, f"pc(C_7({{1,3}})) = {res.number}"


def criterion_2():
    got = {n: pc_number(directed_cycle(n), cap=3).number for n in (3, 4, 5, 6, 7)}
    want = {3: 3, 4: 2, 5: 3, 6: 2, 7: 3}
    return got == want, f"pc(C_n) for n=3..7: {[got[n] for n in sorted(got)]}"


def criterion_3():
    res = pc_number(make_circulant(5, [1, 3]), cap=3)
    return res.number == 2, f"pc(C_5({{1,3}})) = {res.number}"


def criterion_4():
    bad, seen, count = [], set(), 0
    for n in range(9, 20, 2):
        for k in range(3, n, 2):
            count += 1
            D = make_circulant(n, [1, k])
            cert = circulant_bipartite_subdigraph(n, k)
            seen.add(lemma_subcase(n, k))
            H = cert.subdigraph(D)
            if not (is_spanning(n, cert.arcs) and is_strong(H)
                    and is_bipartite_with(D, cert.arcs, cert.parts)):
                bad.append((n, k, "certificate"))
                continue
            sub = tail_side_coloring(H, cert.parts)
            colors = [1] * D.m
            for arc, c in zip(H.arcs, sub.colors):
                colors[D.index[arc]] = c
            if not is_properly_connected(D, ArcColoring(tuple(colors), 2)).ok:
                bad.append((n, k, "coloring"))
    missing = set(SUBCASES) - seen
    ok = not bad and not missing
    return ok, f"{count} instances, subcases hit {len(seen)}/{len(SUBCASES)}, failures {bad or 'none'}"


def criterion_5():
    bad, count = [], 0
    for n in range(4, 16):
        for s in range(2, n):
            count += 1
            D = make_circulant(n, [1, s])
            c = circulant_pc2_coloring(n, [1, s])
            if c.k != 2 or not is_properly_connected(D, c).ok:
                bad.append((n, s))
    return not bad, f"{count} circulants with n=4..15, failures {bad or 'none'}"


def criterion_6():
    bad, count = [], 0
    for n in range(3, 14):
        bound = -(-n // 2)
        for mask in range(1 << (bound - 1)):
            steps = [1] + [s for s in range(2, bound + 1) if mask >> (s - 2) & 1]
            if len(steps) < 2:
                continue  # every vertex needs in- and out-degree at least 2
            count += 1
            D = make_circulant(n, steps)
            got = short_chord_wc_coloring(D, CycleOrder(range(n)))
            walk_ok = is_properly_walk_connected(D, got.coloring.filled(1)).ok
            wc = wc_number(D, cap=3).number
            if not walk_ok or wc != 2:
                bad.append((n, tuple(steps), f"walk_ok={walk_ok}", f"wc={wc}"))
    return not bad, f"{count} circulants with n=3..13, failures {bad or 'none'}"


def criterion_7():
    fixtures = [(f"C_{n}", directed_cycle(n), list(range(n))) for n in range(3, 9)]
    fixtures += [(f"C_{n}({{1,3}})", make_circulant(n, [1, 3]), list(range(n))) for n in (5, 7, 9)]
    for seed in range(AC7_SEEDS):
        rng = random.Random(seed)
        n = rng.randint(3, AC7_MAX_N)
        D, order = random_balanced_hamiltonian(rng, n, rng.randint(1, 3))
        fixtures.append((f"seed {seed}", D, order))
    bad = []
    for name, D, order in fixtures:
        if D.m % 2 == 0:  # the Euler construction needs an even arc count
            if not is_properly_walk_connected(D, euler_alternating_coloring(D)).ok:
                bad.append((name, "euler"))
        try:
            got = balanced_hamiltonian_wc_coloring(D, CycleOrder(order))
            if not is_properly_walk_connected(D, got.coloring).ok:
                bad.append((name, "balanced-ham"))
        except VerificationError as exc:
            bad.append((name, f"balanced-ham: {exc}"))
    return not bad, f"{len(fixtures)} fixtures, failures {bad or 'none'}"


def criterion_8():
    bad, count = [], 0
    for n in range(3, 14):
        if n == 7:
            continue
        for s in range(2, n):
            count += 1
            D = make_circulant(n, [1, s])
            brute = strong_two_partition_bruteforce(D)
            built = strong_two_partition_construct(D, CycleOrder(range(n)))
            if (brute is None) != (built is None):
                bad.append((n, s))
            for parts in (brute, built):
                if parts is not None and not is_strong(crossing_digraph(D, parts)):
                    bad.append((n, s, "not strong"))
    D7 = make_circulant(7, [1, 3])
    fixture = json.loads((FIXTURES / "c7_1_3_partition.json").read_text())
    c7 = strong_two_partition_bruteforce(D7)
    c7_ok = fixture["strong_two_partition"] is None and c7 is None
    if not c7_ok:
        bad.append("C_7({1,3}) fixture")
    return not bad, (f"{count} circulants agree; C_7({{1,3}}) has "
                     f"{'no' if c7 is None else 'a'} strong 2-partition; failures {bad or 'none'}")


class _Numbers:
    """pc / wc with results cached by isomorphism class for small orders."""

    def __init__(self):
        self.cache = {}

    def __call__(self, D: Digraph):
        key = canonical(D) if D.n <= AC9_EXHAUSTIVE_N else None
        if key is not None and key in self.cache:
            return self.cache[key]
        pc = pc_number(D, cap=3)
        wc = wc_number(D, cap=3)
        out = (pc.number, wc.number, pc.witness)
        if key is not None:
            self.cache[key] = out
        return out


def _invariant_failures(D: Digraph, numbers: _Numbers, rng: random.Random) -> list[str]:
    bad = []
    pc, wc, witness = numbers(D)
    rpc, rwc, _ = numbers(reverse(D))
    if (pc, wc) != (rpc, rwc):
        bad.append("reversal")
    if pc is None or wc is None or not wc <= pc <= 3:
        bad.append("order")
    for a in D.arcs:
        H = D.subdigraph([b for b in D.arcs if b != a])
        if H.m and is_strong(H):
            hpc, hwc, _ = numbers(H)
            if not (pc <= hpc and wc <= hwc):
                bad.append(f"monotonicity {a}")
    if is_properly_connected(D, witness).ok and not is_properly_walk_connected(D, witness).ok:
        bad.append("path=>walk (witness)")
    for _ in range(3):
        c = ArcColoring(tuple(rng.randint(1, 3) for _ in range(D.m)), 3)
        for u in range(D.n):
            for v in range(D.n):
                if u != v and pc_path_exists(D, c, u, v) and not pc_walk_exists(D, c, u, v):
                    bad.append(f"path=>walk {(u, v)}")
    return bad


def criterion_9():
    numbers = _Numbers()
    rng = random.Random(2024)
    bad, exhaustive = [], 0
    for D in [Digraph(1, [])] + list(all_strong_digraphs(AC9_EXHAUSTIVE_N)):
        exhaustive += 1
        if D.m:
            bad += [(D.n, D.arcs, f) for f in _invariant_failures(D, numbers, rng)]
    for i in range(AC9_SAMPLES):
        n = AC9_ORDERS[i % len(AC9_ORDERS)]
        D = random_strong_digraph(rng, n, ac9_max_arcs(n))
        bad += [(D.n, D.arcs, f) for f in _invariant_failures(D, numbers, rng)]
    return not bad, (f"{exhaustive} strong digraphs up to iso on <= {AC9_EXHAUSTIVE_N} vertices "
                     f"+ {AC9_SAMPLES} random, failures {bad[:3] or 'none'}")


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}


def evaluate(i: int) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        ok, detail = CRITERIA[i]()
    except (PreconditionError, VerificationError) as exc:
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    in_time = elapsed < LIMITS[i]
    line = (f"[{'PASS' if ok and in_time else 'FAIL'}] criterion {i}: {detail} "
            f"({elapsed:.2f} s, limit {LIMITS[i]:.0f} s)")
    return ok and in_time, line


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i, capsys):
    ok, line = evaluate(i)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(i) for i in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
