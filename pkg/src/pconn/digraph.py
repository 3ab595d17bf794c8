"""Simple digraphs on dense integer vertices, generators and structural predicates."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import PreconditionError

Arc = tuple[int, int]


class DigraphError(PreconditionError):
    """Raised when an input violates a digraph-level precondition."""


class Digraph:
    """Loopless digraph without parallel arcs; opposite arcs are allowed.

    Arcs are kept sorted lexicographically, so an arc's index in ``arcs`` is
    stable and colorings can be stored as flat lists.
    """

    def __init__(self, n: int, arcs: Iterable[Sequence[int]]):
        if n < 1:
            raise DigraphError(f"need at least one vertex, got n={n}")
        arc_list = [(int(a[0]), int(a[1])) for a in arcs]
        seen = set()
        for t, h in arc_list:
            if not (0 <= t < n and 0 <= h < n):
                raise DigraphError(f"arc {(t, h)} has an endpoint outside 0..{n - 1}")
            if t == h:
                raise DigraphError(f"loop at vertex {t}")
            if (t, h) in seen:
                raise DigraphError(f"duplicate arc {(t, h)}")
            seen.add((t, h))
        self.n = n
        self.arcs: tuple[Arc, ...] = tuple(sorted(arc_list))
        self.index: dict[Arc, int] = {a: i for i, a in enumerate(self.arcs)}
        out_arcs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        in_arcs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (t, h) in enumerate(self.arcs):
            out_arcs[t].append((h, i))
            in_arcs[h].append((t, i))
        # (neighbour, arc index) pairs, ordered by neighbour
        self.out_arcs = tuple(tuple(x) for x in out_arcs)
        self.in_arcs = tuple(tuple(sorted(x)) for x in in_arcs)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __len__(self) -> int:
        return self.n

    def __contains__(self, arc) -> bool:
        return tuple(arc) in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"

    def out_degree(self, v: int) -> int:
        return len(self.out_arcs[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_arcs[v])

    def successors(self, v: int) -> list[int]:
        return [h for h, _ in self.out_arcs[v]]

    def predecessors(self, v: int) -> list[int]:
        return [t for t, _ in self.in_arcs[v]]

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for t, h in self.arcs:
            masks[t] |= 1 << h
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for t, h in self.arcs:
            masks[h] |= 1 << t
        return tuple(masks)

    def subdigraph(self, arcs: Iterable[Arc]) -> "Digraph":
        """Spanning subdigraph on the given arcs, which must belong to this digraph."""
        arcs = [tuple(a) for a in arcs]
        for a in arcs:
            if a not in self.index:
                raise DigraphError(f"arc {a} is not in the digraph")
        return Digraph(self.n, arcs)

    def relabel(self, mapping: Sequence[int]) -> "Digraph":
        """Image of the digraph under the vertex bijection ``v -> mapping[v]``."""
        return Digraph(self.n, [(mapping[t], mapping[h]) for t, h in self.arcs])


@dataclass(frozen=True)
class VertexBipartition:
    part1: frozenset
    part2: frozenset

    def __init__(self, part1: Iterable[int], part2: Iterable[int]):
        object.__setattr__(self, "part1", frozenset(part1))
        object.__setattr__(self, "part2", frozenset(part2))
        if self.part1 & self.part2:
            raise DigraphError(f"parts overlap on {sorted(self.part1 & self.part2)}")

    def side(self, v: int) -> int:
        if v in self.part1:
            return 1
        if v in self.part2:
            return 2
        raise DigraphError(f"vertex {v} is in neither part")

    def covers(self, n: int) -> bool:
        return self.part1 | self.part2 == frozenset(range(n))

    def __repr__(self) -> str:
        return f"VertexBipartition({sorted(self.part1)}, {sorted(self.part2)})"


@dataclass(frozen=True)
class ChordClass:
    length: int

    @property
    def even(self) -> bool:
        return self.length % 2 == 0

    @property
    def parity(self) -> str:
        return "even" if self.even else "odd"


class CycleOrder:
    """Cyclic vertex sequence x_0, ..., x_{L-1} (indices taken mod L)."""

    def __init__(self, order: Iterable[int], digraph: Optional[Digraph] = None):
        self.order = tuple(order)
        if not self.order:
            raise DigraphError("empty cycle")
        if len(set(self.order)) != len(self.order):
            raise DigraphError("cycle repeats a vertex")
        self.pos = {v: i for i, v in enumerate(self.order)}
        if digraph is not None:
            self.check(digraph)

    def __len__(self) -> int:
        return len(self.order)

    def __getitem__(self, i: int) -> int:
        return self.order[i % len(self.order)]

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleOrder) and self.order == other.order

    def __repr__(self) -> str:
        return f"CycleOrder({list(self.order)})"

    def arcs(self) -> list[Arc]:
        L = len(self.order)
        return [(self.order[i], self.order[(i + 1) % L]) for i in range(L)]

    def check(self, digraph: Digraph, hamiltonian: bool = True) -> None:
        for a in self.arcs():
            if a not in digraph.index:
                raise DigraphError(f"cycle arc {a} is not in the digraph")
        if hamiltonian and len(self.order) != digraph.n:
            raise DigraphError(
                f"cycle has {len(self.order)} vertices, digraph has {digraph.n}")

    def rotated(self, start: int) -> "CycleOrder":
        """Same cycle relabelled so that position ``start`` becomes x_0."""
        L = len(self.order)
        return CycleOrder(self.order[(start + i) % L] for i in range(L))

    def reversed(self) -> "CycleOrder":
        """The cycle traversed backwards, still starting at x_0."""
        return CycleOrder([self.order[0]] + list(reversed(self.order[1:])))

    def distance(self, u: int, v: int) -> int:
        """Number of cycle arcs on C[u, v]."""
        return (self.pos[v] - self.pos[u]) % len(self.order)


# --- generators -----------------------------------------------------------

def make_circulant(n: int, steps: Iterable[int]) -> Digraph:
    """Circulant digraph C_n(S): arc i -> i+s (mod n) for each vertex i and step s."""
    steps = sorted(set(steps))
    if n < 3:
        raise DigraphError(f"circulant needs n >= 3, got {n}")
    if not steps:
        raise DigraphError("step set is empty")
    bad = [s for s in steps if not 1 <= s <= n - 1]
    if bad:
        raise DigraphError(f"steps {bad} outside 1..{n - 1}")
    return Digraph(n, [(i, (i + s) % n) for i in range(n) for s in steps])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise DigraphError(f"directed cycle needs n >= 2, got {n}")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def biorient(edges: Iterable[Sequence[int]], n: int) -> Digraph:
    arcs = set()
    for e in edges:
        u, v = e
        if u == v:
            raise DigraphError(f"loop at vertex {u}")
        arcs.add((u, v))
        arcs.add((v, u))
    return Digraph(n, arcs)


def complete_biorientation(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def reverse(D: Digraph) -> Digraph:
    return Digraph(D.n, [(h, t) for t, h in D.arcs])


# --- predicates -----------------------------------------------------------

def _reach_mask(masks: Sequence[int], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strong(D: Digraph) -> bool:
    full = (1 << D.n) - 1
    return (_reach_mask(D.out_masks, 0) == full
            and _reach_mask(D.in_masks, 0) == full)


def strong_components(D: Digraph) -> list[list[int]]:
    """Strongly connected components (iterative Tarjan), each sorted."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(D.n):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            succ = D.out_arcs[v]
            if i < len(succ):
                work.append((v, i + 1))
                w = succ[i][0]
                if w not in index:
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def is_bipartite_with(D: Digraph, arcs: Iterable[Arc], parts: VertexBipartition) -> bool:
    """True iff every listed arc of D has its ends in different parts."""
    for a in arcs:
        a = tuple(a)
        if a not in D.index:
            raise DigraphError(f"arc {a} is not in the digraph")
        if parts.side(a[0]) == parts.side(a[1]):
            return False
    return True


def is_spanning(n: int, arcs: Iterable[Arc]) -> bool:
    touched = set()
    for t, h in arcs:
        touched.add(t)
        touched.add(h)
    return n == 1 or len(touched) == n


def chord_class(C: CycleOrder, arc: Arc) -> ChordClass:
    t, h = arc
    length = C.distance(t, h)
    if length == 1:
        raise DigraphError(f"arc {arc} lies on the cycle; not a chord")
    return ChordClass(length)


def chords(D: Digraph, C: CycleOrder) -> list[Arc]:
    """Arcs of D that are not arcs of the Hamiltonian cycle C."""
    return [a for a in D.arcs if C.distance(*a) != 1]


def find_hamiltonian_cycle(D: Digraph) -> Optional[CycleOrder]:
    """Backtracking search from vertex 0, smallest successor first."""
    n = D.n
    if n == 1:
        return None  # no loops, so no 1-cycle
    succ = [D.successors(v) for v in range(n)]
    path = [0]
    visited = 1
    iters = [iter(succ[0])]
    while iters:
        v = path[-1]
        for w in iters[-1]:
            if len(path) == n:
                if w == 0:
                    return CycleOrder(path)
                continue
            if not visited >> w & 1:
                path.append(w)
                visited |= 1 << w
                iters.append(iter(succ[w]))
                break
        else:
            iters.pop()
            visited &= ~(1 << path.pop())
            continue
    return None


def two_color_underlying(D: Digraph, arcs: Iterable[Arc]) -> Optional[VertexBipartition]:
    """BFS 2-coloring of the underlying graph of ``arcs``; None on an odd closed walk."""
    adj: list[list[int]] = [[] for _ in range(D.n)]
    for a in arcs:
        a = tuple(a)
        if a not in D.index:
            raise DigraphError(f"arc {a} is not in the digraph")
        adj[a[0]].append(a[1])
        adj[a[1]].append(a[0])
    side = [0] * D.n
    for root in range(D.n):
        if side[root]:
            continue
        side[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not side[w]:
                    side[w] = 3 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return VertexBipartition([v for v in range(D.n) if side[v] == 1],
                             [v for v in range(D.n) if side[v] == 2])


def is_balanced(D: Digraph, arcs: Optional[Iterable[Arc]] = None) -> bool:
    arcs = D.arcs if arcs is None else arcs
    bal = [0] * D.n
    for t, h in arcs:
        bal[t] += 1
        bal[h] -= 1
    return not any(bal)


def is_complete_biorientation(D: Digraph) -> bool:
    return D.m == D.n * (D.n - 1)
