"""Two-colorings with proper-walk connection: Euler tours, balanced Hamiltonian
digraphs, and Hamiltonian digraphs whose chords are all short."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .digraph import Arc, CycleOrder, Digraph, chord_class, chords, is_balanced, is_strong
from .errors import PreconditionError, VerificationError
from .verify import ArcColoring, is_properly_walk_connected, wc_number

log = logging.getLogger(__name__)

DECOMPOSITION_LIMIT = 2000


class LandingError(VerificationError):
    """The odd-chord path landed on x_0 instead of strictly between x_0 and x_p."""


@dataclass(frozen=True)
class WalkColoring:
    """A 2-coloring together with the route that produced it."""
    coloring: ArcColoring
    route: str


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[tuple[int, ...], ...]

    def arcs(self) -> list[Arc]:
        out = []
        for cyc in self.cycles:
            out.extend((cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        return out

    def odd_cycles(self) -> list[tuple[int, ...]]:
        return [c for c in self.cycles if len(c) % 2]


def _verified(D: Digraph, coloring: ArcColoring, what: str) -> ArcColoring:
    report = is_properly_walk_connected(D, coloring.filled(1))
    if not report.ok:
        raise VerificationError(f"{what}: construction check failed at pair {report.failing_pair}")
    return coloring


# --- Euler tours ------------------------------------------------------------

def euler_tour(D: Digraph, start: int = 0) -> list[int]:
    """Closed Euler tour as a list of arc indices (Hierholzer, smallest head first)."""
    ptr = [0] * D.n
    stack: list[tuple[int, Optional[int]]] = [(start, None)]
    tour: list[int] = []
    while stack:
        v, a = stack[-1]
        if ptr[v] < len(D.out_arcs[v]):
            w, b = D.out_arcs[v][ptr[v]]
            ptr[v] += 1
            stack.append((w, b))
        else:
            stack.pop()
            if a is not None:
                tour.append(a)
    tour.reverse()
    return tour


def euler_alternating_coloring(D: Digraph) -> ArcColoring:
    """Alternate colors 1, 2 along a closed Euler tour from vertex 0."""
    for v in range(D.n):
        if D.out_degree(v) != D.in_degree(v):
            raise PreconditionError(f"vertex {v} is unbalanced")
    if D.m % 2:
        raise PreconditionError(f"odd arc count ({D.m})")
    if not is_strong(D):
        raise PreconditionError("digraph is not strong")
    tour = euler_tour(D)
    if len(tour) != D.m:
        raise VerificationError("Euler tour does not use every arc")
    colors = [0] * D.m
    for i, a in enumerate(tour):
        colors[a] = 1 + i % 2
    for a, b in zip(tour, tour[1:] + tour[:1]):
        if colors[a] == colors[b]:
            raise VerificationError(f"consecutive tour arcs {D.arcs[a]}, {D.arcs[b]} share a color")
    return _verified(D, ArcColoring(tuple(colors), 2), "Euler alternation")


# --- cycle decompositions ---------------------------------------------------

def _arc_lists(arcs: Iterable[Arc], n: int) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(n)]
    for t, h in arcs:
        out[t].append(h)
    for heads in out:
        heads.sort()
    return out


def _check_partition(arcs: list[Arc], dec: CycleDecomposition) -> CycleDecomposition:
    got = dec.arcs()
    if len(got) != len(set(got)) or set(got) != set(arcs):
        raise VerificationError("cycle decomposition is not a partition of the arc set")
    return dec


def _balanced_subset(D: Digraph, arcs: Optional[Iterable[Arc]]) -> list[Arc]:
    arcs = list(D.arcs) if arcs is None else [tuple(a) for a in arcs]
    for a in arcs:
        if a not in D.index:
            raise PreconditionError(f"arc {a} is not in the digraph")
    if not is_balanced(D, arcs):
        raise PreconditionError("arc subset is not balanced")
    return arcs


def cycle_decompose(D: Digraph, arcs: Optional[Iterable[Arc]] = None) -> CycleDecomposition:
    """Greedy peeling: walk smallest heads from the smallest vertex until a vertex repeats."""
    arcs = _balanced_subset(D, arcs)
    out = _arc_lists(arcs, D.n)
    cycles = []
    while True:
        start = next((v for v in range(D.n) if out[v]), None)
        if start is None:
            break
        walk = [start]
        where = {start: 0}
        while True:
            w = out[walk[-1]][0]
            if w in where:
                cyc = walk[where[w]:]
                break
            where[w] = len(walk)
            walk.append(w)
        for i, v in enumerate(cyc):
            out[v].remove(cyc[(i + 1) % len(cyc)])
        cycles.append(tuple(cyc))
    return _check_partition(arcs, CycleDecomposition(tuple(cycles)))


def _cycles_through(out: list[list[int]], t: int, h: int) -> Iterator[list[int]]:
    """Simple cycles that use the arc t -> h."""
    path = [t, h]
    on = {t, h}
    if h == t:
        return
    iters = [iter(out[h])]
    while iters:
        for w in iters[-1]:
            if w == t:
                yield list(path)
                continue
            if w in on:
                continue
            path.append(w)
            on.add(w)
            iters.append(iter(out[w]))
            break
        else:
            iters.pop()
            on.discard(path.pop())


def iter_cycle_decompositions(D: Digraph, arcs: Optional[Iterable[Arc]] = None,
                              limit: int = DECOMPOSITION_LIMIT) -> Iterator[CycleDecomposition]:
    """Every cycle decomposition (up to ``limit``), by backtracking over the cycle
    that covers the smallest remaining arc."""
    arcs = _balanced_subset(D, arcs)
    count = 0

    def rec(remaining: frozenset, acc: list[tuple[int, ...]]):
        nonlocal count
        if count >= limit:
            return
        if not remaining:
            count += 1
            yield CycleDecomposition(tuple(acc))
            return
        t, h = min(remaining)
        out = _arc_lists(remaining, D.n)
        for cyc in _cycles_through(out, t, h):
            used = {(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
            yield from rec(remaining - used, acc + [tuple(cyc)])
            if count >= limit:
                return

    yield from rec(frozenset(arcs), [])


# --- balanced Hamiltonian digraphs --------------------------------------------

def _cycle_pair_coloring(D: Digraph, C: CycleOrder, odd: tuple[int, ...]) -> ArcColoring:
    """Alternate along C and along the odd cycle, both starting at the odd cycle's
    smallest vertex v: C's arcs at v get 1, the odd cycle's arcs at v get 2."""
    v = min(odd)
    colors = [1] * D.m
    R = C.rotated(C.pos[v])
    for i, a in enumerate(R.arcs()):
        colors[D.index[a]] = 1 + i % 2
    i0 = odd.index(v)
    L = len(odd)
    for i in range(L):
        a = (odd[(i0 + i) % L], odd[(i0 + i + 1) % L])
        colors[D.index[a]] = 2 - i % 2
    return ArcColoring(tuple(colors), 2)


def _alternate_on_cycle(D: Digraph, C: CycleOrder, fill: int) -> ArcColoring:
    colors = [fill] * D.m
    for i, a in enumerate(C.arcs()):
        colors[D.index[a]] = 1 + i % 2
    return ArcColoring(tuple(colors), 2)


def balanced_hamiltonian_wc_coloring(D: Digraph, C: CycleOrder) -> WalkColoring:
    """Walk-connected 2-coloring of a balanced Hamiltonian digraph.

    Odd order: an odd cycle of D - A(C) is taken from the greedy decomposition,
    then from further decompositions; if D - A(C) has no odd cycle at all the
    answer comes from exhaustive search (and may not exist, e.g. odd directed cycles).
    """
    C.check(D)
    for v in range(D.n):
        if D.out_degree(v) != D.in_degree(v):
            raise PreconditionError(f"vertex {v} is unbalanced")
    if D.n % 2 == 0:
        return WalkColoring(_verified(D, _alternate_on_cycle(D, C, 1), "cycle alternation"),
                            "even cycle")
    on_cycle = set(C.arcs())
    rest = [a for a in D.arcs if a not in on_cycle]
    tried = set()
    decompositions = [cycle_decompose(D, rest)]
    for stage, decs in (("greedy decomposition", decompositions),
                        ("backtracking decomposition", iter_cycle_decompositions(D, rest))):
        for dec in decs:
            for odd in dec.odd_cycles():
                if odd in tried:
                    continue
                tried.add(odd)
                coloring = _cycle_pair_coloring(D, C, odd)
                if is_properly_walk_connected(D, coloring).ok:
                    return WalkColoring(coloring, stage)
                log.warning("cycle-pair coloring with odd cycle %s failed verification", odd)
    found = wc_number(D, cap=2)
    if found.number is None:
        raise VerificationError("no 2-coloring found: digraph is not properly-walk 2-connectable")
    return WalkColoring(found.witness, "exhaustive search")


# --- short chords -------------------------------------------------------------

def _base_phi(R: CycleOrder, D: Digraph, colors: list[int]) -> dict[int, int]:
    """Color of x_i x_{i+1}, keyed by i, for the base cycle coloring."""
    n = len(R)
    phi = {0: 1, 1: 1, n - 1: 2}
    for i in range(2, n - 1):
        phi[i] = 1 if i % 2 else 2
    for i, c in phi.items():
        colors[D.index[(R[i], R[i + 1])]] = c
    return phi


def _chord_into(D: Digraph, R: CycleOrder, i: int, odd: bool, far: int) -> Optional[int]:
    """Position of the tail of a chord into x_i of the given parity.

    Tails in the far segment [far, n-1] win (smallest first), then smallest overall."""
    n = len(R)
    tails = []
    for t, _ in D.in_arcs[R[i]]:
        q = R.pos[t]
        length = (i - q) % n
        if length >= 2 and (length % 2 == 1) == odd:
            tails.append(q)
    if not tails:
        return None
    in_far = [q for q in tails if far <= q <= n - 1]
    return min(in_far) if in_far else min(tails)


def _color_odd_heads(D: Digraph, R: CycleOrder, colors: list[int], phi: dict[int, int],
                     upto: int, far: int, what: str) -> None:
    """Color one odd chord into each x_i, 2 <= i < upto."""
    into: dict[int, int] = {}
    for i in range(2, upto):
        q = _chord_into(D, R, i, odd=True, far=far)
        if q is None:
            raise VerificationError(f"{what}: x_{i} has no odd chord")
        if far <= q <= len(R) - 1:
            c = 3 - phi[q - 1]
        elif q == 0:
            c = 1
        elif q == 1:
            c = 2
        elif 2 <= q <= i - 3:
            c = 3 - into[q]
        else:
            raise VerificationError(f"{what}: odd chord x_{q} x_{i} outside the expected ranges")
        colors[D.index[(R[q], R[i])]] = c
        into[i] = c


def _short_chord_case1(D: Digraph, C: CycleOrder, even: list[Arc]) -> ArcColoring:
    n = D.n
    tail, head = min(even, key=lambda a: (C.distance(*a), C.pos[a[0]]))
    R = C.rotated(C.pos[tail])
    p = R.pos[head]
    colors = [0] * D.m
    phi = _base_phi(R, D, colors)
    colors[D.index[(tail, head)]] = 1
    j = next(i for i in range(2, p + 1)
             if _chord_into(D, R, i, odd=False, far=p + 1) is not None)
    if j < p:
        t = _chord_into(D, R, j, odd=False, far=p + 1)
        if not p + 1 <= t <= n - 1:
            raise VerificationError(f"case 1: even chord into x_{j} has tail x_{t} outside the far segment")
        colors[D.index[(R[t], R[j])]] = 3 - phi[t - 1]
    _color_odd_heads(D, R, colors, phi, j, p + 1, "case 1")
    return ArcColoring(tuple(colors), 2)


def _odd_chord_paths(D: Digraph, R: CycleOrder, p: int) -> Iterator[list[int]]:
    """Chord paths from x_p that wrap past x_0, longest chord first at every step."""
    n = len(R)

    def outs(i: int) -> list[int]:
        heads = [R.pos[h] for h, _ in D.out_arcs[R[i]]]
        lengths = sorted(((h - i) % n for h in heads if (h - i) % n >= 2), reverse=True)
        return [(i + ln) % n for ln in lengths]

    def rec(path: list[int]):
        for nxt in outs(path[-1]):
            if nxt < path[-1]:
                yield path + [nxt]
            else:
                yield from rec(path + [nxt])

    yield from rec([p])


def _short_chord_case2(D: Digraph, C: CycleOrder, chord_list: list[Arc]) -> ArcColoring:
    n = D.n
    longest = max(C.distance(*a) for a in chord_list)
    starts = sorted((C.pos[t], t, h) for t, h in chord_list if C.distance(t, h) == longest)
    for _, tail, head in starts:
        R = C.rotated(C.pos[tail])
        p = R.pos[head]
        for path in _odd_chord_paths(D, R, p):
            landing = path[-1]
            if not 0 < landing < p:
                continue
            colors = [0] * D.m
            phi = _base_phi(R, D, colors)
            colors[D.index[(tail, head)]] = 1
            for idx, (a, b) in enumerate(zip(path, path[1:])):
                colors[D.index[(R[a], R[b])]] = 2 if idx % 2 == 0 else 1
            _color_odd_heads(D, R, colors, phi, landing, p + 1, "case 2")
            return ArcColoring(tuple(colors), 2)
    raise LandingError("every odd-chord path from a longest chord lands on x_0")


def short_chord_preconditions(D: Digraph, C: CycleOrder) -> None:
    C.check(D)
    for v in range(D.n):
        if D.out_degree(v) < 2 or D.in_degree(v) < 2:
            raise PreconditionError(f"vertex {v} has in- or out-degree below 2")
    bound = -(-D.n // 2)
    for a in chords(D, C):
        if chord_class(C, a).length > bound:
            raise PreconditionError(f"chord {a} is longer than {bound}")


def short_chord_construction(D: Digraph, C: CycleOrder) -> WalkColoring:
    """The cycle-plus-chords partial coloring; raises LandingError on the case-2 gap."""
    short_chord_preconditions(D, C)
    if D.n % 2 == 0:
        colors = [0] * D.m
        for i, a in enumerate(C.arcs()):
            colors[D.index[a]] = 1 + i % 2
        return WalkColoring(_verified(D, ArcColoring(tuple(colors), 2), "even cycle"),
                            "even cycle")
    chord_list = chords(D, C)
    even = [a for a in chord_list if chord_class(C, a).even]
    if even:
        return WalkColoring(_verified(D, _short_chord_case1(D, C, even), "case 1"), "case 1")
    return WalkColoring(_verified(D, _short_chord_case2(D, C, chord_list), "case 2"), "case 2")


def short_chord_wc_coloring(D: Digraph, C: CycleOrder) -> WalkColoring:
    """Partial 2-coloring (0 = uncolored) that makes D properly-walk connected.

    When every odd-chord path lands on x_0 (e.g. C_9({1,3})), the chord-path
    step has nothing to work with and an exhaustive 2-coloring search is used.
    """
    try:
        return short_chord_construction(D, C)
    except LandingError as exc:
        log.info("short-chord case 2 unavailable (%s); searching", exc)
    found = wc_number(D, cap=2)
    if found.number is None:
        raise VerificationError("construction check failed: no walk-connected 2-coloring exists")
    return WalkColoring(found.witness, "exhaustive search")
