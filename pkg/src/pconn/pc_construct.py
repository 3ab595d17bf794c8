"""Two-colorings with proper connection from bipartite structure and Hamiltonian cycles."""
from __future__ import annotations

from typing import Iterable

from .certificate import BipartiteSpanningCertificate
from .digraph import (CycleOrder, Digraph, VertexBipartition, chord_class, chords,
                      is_bipartite_with, is_strong, make_circulant, reverse)
from .ears import circulant_bipartite_subdigraph
from .errors import PreconditionError, VerificationError
from .verify import ArcColoring, is_properly_connected, pc_number


def _verified(D: Digraph, coloring: ArcColoring, what: str) -> ArcColoring:
    report = is_properly_connected(D, coloring)
    if not report.ok:
        raise VerificationError(f"{what}: verification failed at pair {report.failing_pair}")
    return coloring


def tail_side_coloring(D: Digraph, parts: VertexBipartition) -> ArcColoring:
    """Color 1 on arcs leaving part1, color 2 on arcs leaving part2."""
    if not parts.covers(D.n):
        raise PreconditionError("parts do not cover the vertex set")
    if not is_bipartite_with(D, D.arcs, parts):
        bad = next(a for a in D.arcs if parts.side(a[0]) == parts.side(a[1]))
        raise PreconditionError(f"not bipartite under parts: arc {bad}")
    coloring = ArcColoring(tuple(parts.side(t) for t, _ in D.arcs), 2)
    if is_strong(D):
        _verified(D, coloring, "tail-side coloring")
    return coloring


def certificate_coloring(D: Digraph, cert: BipartiteSpanningCertificate) -> ArcColoring:
    """Tail-side coloring of the certificate, other arcs of D colored 1, verified on D."""
    cert.verified(D)
    colors = [1] * D.m
    for t, h in cert.arcs:
        colors[D.index[(t, h)]] = cert.parts.side(t)
    return _verified(D, ArcColoring(tuple(colors), 2), f"certificate coloring ({cert.route})")


def almost_bipartite_coloring(D: Digraph, v1a: Iterable[int], v1b: Iterable[int],
                              v2: Iterable[int]) -> ArcColoring:
    """Two-coloring for a strong D whose core D[v1a | v1b] is strong bipartite and v2 is independent."""
    v1a, v1b, v2 = set(v1a), set(v1b), set(v2)
    core = v1a | v1b
    if (v1a & v1b) or (core & v2) or core | v2 != set(range(D.n)):
        raise PreconditionError("v1a, v1b, v2 must partition the vertex set")
    if not v1a or not v1b:
        raise PreconditionError("both sides of the bipartite core must be nonempty")
    if not is_strong(D):
        raise PreconditionError("digraph is not strong")
    for t, h in D.arcs:
        if t in v2 and h in v2:
            raise PreconditionError(f"v2 is not independent: arc {(t, h)}")
        if (t in v1a and h in v1a) or (t in v1b and h in v1b):
            raise PreconditionError(f"core is not bipartite under (v1a, v1b): arc {(t, h)}")
    core_list = sorted(core)
    relabel = {v: i for i, v in enumerate(core_list)}
    inner = Digraph(len(core_list), [(relabel[t], relabel[h]) for t, h in D.arcs
                                     if t in core and h in core])
    if not is_strong(inner):
        raise PreconditionError("core D[v1a | v1b] is not strong")

    def color(t: int, h: int) -> int:
        if t in core:
            return 1 if t in v1a else 2
        return 1 if h in v1b else 2

    coloring = ArcColoring(tuple(color(t, h) for t, h in D.arcs), 2)
    return _verified(D, coloring, "almost-bipartite coloring")


def _require_odd_hamiltonian(D: Digraph, C: CycleOrder) -> None:
    C.check(D)
    if D.n % 2 == 0:
        raise PreconditionError(f"order must be odd, got {D.n}")


def even_tail_subdigraph(D: Digraph, C: CycleOrder) -> BipartiteSpanningCertificate:
    """Certificate for an odd Hamiltonian D where every vertex tails an even chord of C."""
    _require_odd_hamiltonian(D, C)
    even = [a for a in chords(D, C) if chord_class(C, a).even]
    tails = {t for t, _ in even}
    for v in C.order:
        if v not in tails:
            raise PreconditionError(f"vertex {v} is not the tail of an even chord")
    n = D.n
    # shortest even chord, ties by the tail's position on C; its head becomes x_0
    tail, head = min(even, key=lambda a: (C.distance(*a), C.pos[a[0]]))
    R = C.rotated(C.pos[head])
    p = R.pos[tail]
    arcs = set(R.arcs())
    arcs.discard((R[n - 1], R[0]))
    arcs.add((tail, head))
    arcs.update(a for a in even if R.pos[a[0]] > p)
    parts = VertexBipartition(R.order[0::2], R.order[1::2])
    cert = BipartiteSpanningCertificate(tuple(sorted(arcs)), parts, "even tail")
    return cert.verified(D)


def even_head_subdigraph(D: Digraph, C: CycleOrder) -> BipartiteSpanningCertificate:
    """Certificate when every vertex heads an even chord: even-tail on the reversed digraph."""
    _require_odd_hamiltonian(D, C)
    try:
        rev = even_tail_subdigraph(reverse(D), C.reversed())
    except PreconditionError as exc:
        raise PreconditionError(str(exc).replace("tail", "head")) from None
    arcs = tuple(sorted((h, t) for t, h in rev.arcs))
    return BipartiteSpanningCertificate(arcs, rev.parts, "even head").verified(D)


def _step_cycle(n: int) -> CycleOrder:
    return CycleOrder(range(n))


def circulant_pc2_coloring(n: int, steps: Iterable[int]) -> ArcColoring:
    """Properly connected 2-coloring of C_n(S) for n >= 4, |S| >= 2, 1 in S."""
    steps = sorted(set(steps))
    if n < 4:
        raise PreconditionError(f"need n >= 4, got {n}")
    if len(steps) < 2 or 1 not in steps:
        raise PreconditionError(f"need |S| >= 2 and 1 in S, got {steps}")
    D = make_circulant(n, steps)
    if n % 2 == 0:
        colors = [1] * D.m
        for i in range(n):
            colors[D.index[(i, (i + 1) % n)]] = 1 if i % 2 == 0 else 2
        return _verified(D, ArcColoring(tuple(colors), 2), "even-cycle alternation")
    evens = [s for s in steps if s % 2 == 0]
    if evens:
        sub = make_circulant(n, [1, evens[0]])
        cert = even_tail_subdigraph(sub, _step_cycle(n))
        return certificate_coloring(D, cert)
    k = steps[1]
    if n >= 9:
        return certificate_coloring(D, circulant_bipartite_subdigraph(n, k))
    # n in {5, 7}: no ear construction; exhaustive 2-coloring search on C_n({1,k})
    sub = make_circulant(n, [1, k])
    found = pc_number(sub, cap=2)
    if found.number is None:
        raise VerificationError(f"no properly connected 2-coloring of C_{n}(1,{k})")
    colors = [1] * D.m
    for a, c in zip(sub.arcs, found.witness.colors):
        colors[D.index[a]] = c
    return _verified(D, ArcColoring(tuple(colors), 2), "searched witness")
