"""Small-digraph generators shared by the tests."""
from __future__ import annotations

import itertools
import random

from pconn import Digraph, is_strong


def canonical(D: Digraph) -> tuple:
    """Lexicographically least sorted arc list over all relabelings (small n only)."""
    best = None
    for perm in itertools.permutations(range(D.n)):
        key = tuple(sorted((perm[t], perm[h]) for t, h in D.arcs))
        if best is None or key < best:
            best = key
    return (D.n, best)


def all_strong_digraphs(max_n: int = 4):
    """One representative per isomorphism class of strong digraphs with 2..max_n vertices."""
    seen = set()
    for n in range(2, max_n + 1):
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        for mask in range(1 << len(pairs)):
            arcs = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if len(arcs) < n:
                continue
            D = Digraph(n, arcs)
            if not is_strong(D):
                continue
            key = canonical(D)
            if key not in seen:
                seen.add(key)
                yield D


def random_strong_digraph(rng: random.Random, n: int, max_arcs: int) -> Digraph:
    """Random Hamiltonian cycle plus random extra arcs, at most max_arcs arcs in total."""
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    others = [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in arcs]
    rng.shuffle(others)
    arcs.update(others[:rng.randint(0, max(0, max_arcs - n))])
    return Digraph(n, arcs)


def random_balanced_hamiltonian(rng: random.Random, n: int, extra_cycles: int):
    """A Hamiltonian cycle plus arc-disjoint random cycles; returns (D, cycle order)."""
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    for _ in range(extra_cycles):
        for _attempt in range(20):
            length = rng.randint(2, n)
            cyc = rng.sample(range(n), length)
            new = [(cyc[i], cyc[(i + 1) % length]) for i in range(length)]
            if not any(a in arcs for a in new):
                arcs.update(new)
                break
    return Digraph(n, arcs), order
