"""Strong 2-partitions: exhaustive search and constructive routes."""
from __future__ import annotations

from typing import Optional

from .digraph import (CycleOrder, Digraph, DigraphError, VertexBipartition, _reach_mask,
                      chord_class, chords, is_strong)
from .ears import circulant_bipartite_subdigraph
from .errors import VerificationError
from .pc_construct import even_head_subdigraph, even_tail_subdigraph


def crossing_digraph(D: Digraph, parts: VertexBipartition) -> Digraph:
    """Spanning subdigraph of the arcs with one end in each part."""
    if not parts.part1 or not parts.part2 or not parts.covers(D.n):
        raise DigraphError("parts must be two nonempty sets partitioning the vertex set")
    return Digraph(D.n, [a for a in D.arcs if (a[0] in parts.part1) != (a[1] in parts.part1)])


def is_strong_partition(D: Digraph, parts: VertexBipartition) -> bool:
    return is_strong(crossing_digraph(D, parts))


def _crossing_strong(D: Digraph, mask: int) -> bool:
    n = D.n
    full = (1 << n) - 1
    other = full & ~mask
    outs = [D.out_masks[v] & (other if mask >> v & 1 else mask) for v in range(n)]
    if _reach_mask(outs, 0) != full:
        return False
    ins = [D.in_masks[v] & (other if mask >> v & 1 else mask) for v in range(n)]
    return _reach_mask(ins, 0) == full


def strong_two_partition_bruteforce(D: Digraph) -> Optional[VertexBipartition]:
    """First strong 2-partition by ascending part1 bitmask, vertex 0 pinned to part1."""
    n = D.n
    if n < 2:
        return None
    full = (1 << n) - 1
    for rest in range(1 << (n - 1)):
        mask = 1 | rest << 1
        if mask == full:
            continue
        if _crossing_strong(D, mask):
            return VertexBipartition([v for v in range(n) if mask >> v & 1],
                                     [v for v in range(n) if not mask >> v & 1])
    return None


def _odd_circulant_step(D: Digraph, C: CycleOrder) -> Optional[int]:
    """Odd k with 3 <= k <= n-1 such that x_i -> x_{i+k} is an arc for every i."""
    n = D.n
    for k in range(3, n, 2):
        if all((C[i], C[i + k]) in D.index for i in range(n)):
            return k
    return None


def construct_with_route(D: Digraph, C: CycleOrder) -> Optional[tuple[VertexBipartition, str]]:
    """Strong 2-partition from a Hamiltonian cycle plus the route name, or None.

    Routes: even order (alternate along C), every vertex tails an even chord,
    every vertex heads an even chord, D contains C_5({1,3}) along C, D contains
    C_n({1,k}) along C with k odd and n >= 9.
    """
    C.check(D)
    n = D.n
    if n < 2:
        return None
    if n % 2 == 0:
        parts, route = VertexBipartition(C.order[0::2], C.order[1::2]), "even order"
    else:
        parts = route = None
        even = [a for a in chords(D, C) if chord_class(C, a).even]
        if {t for t, _ in even} == set(range(n)):
            parts, route = even_tail_subdigraph(D, C).parts, "even tail"
        elif {h for _, h in even} == set(range(n)):
            parts, route = even_head_subdigraph(D, C).parts, "even head"
        elif n == 5 and _odd_circulant_step(D, C) == 3:
            # C_5({1,3}) along C, settled by inspection: ({x_0,x_1}, {x_2,x_3,x_4})
            parts = VertexBipartition(C.order[:2], C.order[2:])
            route = "C_5(1,3) by inspection"
        else:
            k = _odd_circulant_step(D, C) if n >= 9 else None
            if k is None:
                return None
            cert = circulant_bipartite_subdigraph(n, k)
            # certificate lives on positions 0..n-1 of C
            parts = VertexBipartition([C[v] for v in cert.parts.part1],
                                      [C[v] for v in cert.parts.part2])
            route = f"circulant k={k} ({cert.route})"
    if not is_strong_partition(D, parts):
        raise VerificationError(f"{route}: crossing digraph is not strong")
    return parts, route


def strong_two_partition_construct(D: Digraph, C: CycleOrder) -> Optional[VertexBipartition]:
    found = construct_with_route(D, C)
    return None if found is None else found[0]


__all__ = [
    "construct_with_route",
    "crossing_digraph",
    "is_strong_partition",
    "strong_two_partition_bruteforce",
    "strong_two_partition_construct",
]
