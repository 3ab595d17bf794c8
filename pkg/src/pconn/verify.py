"""Properly colored path/walk oracles and exhaustive pc/wc solvers.

A coloring is a flat tuple indexed like ``Digraph.arcs``. Colors are
1..k; partial colorings use 0 for an uncolored arc.
"""
from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .digraph import Digraph, DigraphError, is_strong

# Above this many candidate colorings per k, a seeded random probe runs
# before the ordered enumeration. Smaller spaces are enumerated in order.
PROBE_THRESHOLD = 1 << 14
PROBE_TRIES = 4000


class NotStrongError(DigraphError):
    """pc and wc are only defined for strong digraphs."""


@dataclass(frozen=True)
class ArcColoring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for c in self.colors:
            if not 0 <= c <= self.k:
                raise ValueError(f"color {c} outside 0..{self.k}")

    @classmethod
    def from_mapping(cls, D: Digraph, mapping: Mapping, k: int, default: int = 0) -> "ArcColoring":
        colors = [default] * D.m
        for arc, c in mapping.items():
            arc = tuple(arc)
            if arc not in D.index:
                raise DigraphError(f"arc {arc} is not in the digraph")
            colors[D.index[arc]] = c
        return cls(tuple(colors), k)

    @property
    def is_total(self) -> bool:
        return all(self.colors)

    def filled(self, color: int = 1) -> "ArcColoring":
        """Total coloring with every uncolored arc set to ``color``."""
        return ArcColoring(tuple(c or color for c in self.colors), max(self.k, color))

    def color_of(self, D: Digraph, arc) -> int:
        return self.colors[D.index[tuple(arc)]]

    def reversed_for(self, D: Digraph) -> "ArcColoring":
        """The same colors carried over to the arcs of reverse(D)."""
        rev = sorted((h, t) for t, h in D.arcs)
        pos = {a: i for i, a in enumerate(rev)}
        colors = [0] * D.m
        for i, (t, h) in enumerate(D.arcs):
            colors[pos[(h, t)]] = self.colors[i]
        return ArcColoring(tuple(colors), self.k)


# Both names describe the same flat representation; partial colorings carry zeros.
PartialArcColoring = ArcColoring


@dataclass(frozen=True)
class ConnectivityReport:
    ok: bool
    failing_pair: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def _check_coloring(D: Digraph, c: ArcColoring, total: bool = True) -> tuple[int, ...]:
    if len(c.colors) != D.m:
        raise ValueError(f"coloring has {len(c.colors)} entries, digraph has {D.m} arcs")
    if total and not c.is_total:
        raise ValueError("coloring leaves arcs uncolored")
    return c.colors


# --- walks ----------------------------------------------------------------

def _walk_reach(D: Digraph, colors: Sequence[int], u: int) -> int:
    """Bitmask of vertices reachable from u by a properly colored walk of length >= 1."""
    out = D.out_arcs
    reached = 0
    seen = set()
    stack = []
    for w, a in out[u]:
        st = (w, colors[a])
        if st not in seen:
            seen.add(st)
            stack.append(st)
    while stack:
        v, c = stack.pop()
        reached |= 1 << v
        for w, a in out[v]:
            ca = colors[a]
            if ca != c:
                st = (w, ca)
                if st not in seen:
                    seen.add(st)
                    stack.append(st)
    return reached


def pc_walk_exists(D: Digraph, c: ArcColoring, u: int, v: int) -> bool:
    if u == v:
        raise ValueError("walk endpoints must be distinct")
    colors = _check_coloring(D, c)
    return bool(_walk_reach(D, colors, u) >> v & 1)


def _walk_failure(D: Digraph, colors: Sequence[int]) -> Optional[tuple[int, int]]:
    full = (1 << D.n) - 1
    for u in range(D.n):
        missing = full & ~_walk_reach(D, colors, u) & ~(1 << u)
        if missing:
            return (u, (missing & -missing).bit_length() - 1)
    return None


def is_properly_walk_connected(D: Digraph, c: ArcColoring) -> ConnectivityReport:
    fail = _walk_failure(D, _check_coloring(D, c))
    return ConnectivityReport(fail is None, fail)


# --- paths ----------------------------------------------------------------

def pc_path_exists(D: Digraph, c: ArcColoring, u: int, v: int) -> bool:
    """Properly colored simple u->v path, by depth-first search over simple paths."""
    if u == v:
        raise ValueError("path endpoints must be distinct")
    colors = _check_coloring(D, c)
    if not _walk_reach(D, colors, u) >> v & 1:
        return False
    out = D.out_arcs

    def branch_order(x: int, visited: int, last: int):
        cand = [(w, a) for w, a in out[x] if colors[a] != last and not visited >> w & 1]
        if any(w == v for w, _ in cand):
            return [(w, a) for w, a in cand if w == v]
        # fewest onward options first
        cand.sort(key=lambda wa: (sum(1 for y, b in out[wa[0]]
                                      if colors[b] != colors[wa[1]] and not visited >> y & 1), wa[0]))
        return cand

    stack = [iter(branch_order(u, 1 << u, 0))]
    trail = [(u, 0)]
    visited = 1 << u
    while stack:
        for w, a in stack[-1]:
            if w == v:
                return True
            visited |= 1 << w
            trail.append((w, colors[a]))
            stack.append(iter(branch_order(w, visited, colors[a])))
            break
        else:
            stack.pop()
            x, _ = trail.pop()
            visited &= ~(1 << x)
    return False


def _path_reach(D: Digraph, colors: Sequence[int], u: int, want: int) -> int:
    """Vertices reachable from u by properly colored simple paths.

    Stops as soon as every vertex in ``want`` is reached. The visited triple
    (vertex, last color, vertex set) fully determines the possible
    extensions, so each triple is expanded once.
    """
    out = D.out_arcs
    reached = 0
    seen = set()
    stack = [(u, 0, 1 << u)]
    while stack:
        v, c, mask = stack.pop()
        for w, a in out[v]:
            if mask >> w & 1:
                continue
            ca = colors[a]
            if ca == c:
                continue
            reached |= 1 << w
            st = (w, ca, mask | 1 << w)
            if st not in seen:
                seen.add(st)
                stack.append(st)
        if reached & want == want:
            break
    return reached


def _path_failure(D: Digraph, colors: Sequence[int]) -> Optional[tuple[int, int]]:
    full = (1 << D.n) - 1
    for u in range(D.n):
        want = full & ~(1 << u)
        missing = want & ~_path_reach(D, colors, u, want)
        if missing:
            return (u, (missing & -missing).bit_length() - 1)
    return None


def is_properly_connected(D: Digraph, c: ArcColoring) -> ConnectivityReport:
    colors = _check_coloring(D, c)
    fail = _walk_failure(D, colors)
    if fail is None:
        fail = _path_failure(D, colors)
    return ConnectivityReport(fail is None, fail)


# --- exhaustive solvers ---------------------------------------------------

@dataclass(frozen=True)
class NumberResult:
    """Outcome of pc_number / wc_number. ``number`` is None when it exceeds the cap."""
    number: Optional[int]
    witness: Optional[ArcColoring]
    cap: int

    @property
    def exceeds_cap(self) -> bool:
        return self.number is None


def _accepts(D: Digraph, colors: Sequence[int], paths: bool) -> bool:
    if _walk_failure(D, colors) is not None:
        return False
    return not paths or _path_failure(D, colors) is None


def _scan_range(D: Digraph, k: int, paths: bool, lo: int, hi: int) -> Optional[int]:
    """Lowest counter value in [lo, hi) whose coloring is accepted."""
    m = D.m
    for value in range(lo, hi):
        if _accepts(D, _decode(value, k, m), paths):
            return value
    return None


def _decode(value: int, k: int, m: int) -> tuple[int, ...]:
    # arc 0 pinned to color 1; the last arc is the least significant digit
    digits = [0] * m
    digits[0] = 1
    for i in range(m - 1, 0, -1):
        value, r = divmod(value, k)
        digits[i] = r + 1
    return tuple(digits)


def _threads() -> int:
    env = os.environ.get("PCONN_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _search(D: Digraph, k: int, paths: bool, workers: int) -> Optional[tuple[int, ...]]:
    m = D.m
    if m == 0:
        return ()
    if k == 1:
        colors = (1,) * m
        return colors if _accepts(D, colors, paths) else None
    total = k ** (m - 1)
    if total > PROBE_THRESHOLD:
        rng = random.Random(f"{D.n}:{D.arcs}:{k}:{paths}")
        for _ in range(PROBE_TRIES):
            colors = (1,) + tuple(rng.randint(1, k) for _ in range(m - 1))
            if _accepts(D, colors, paths):
                return colors
    if workers <= 1 or total < 4096:
        hit = _scan_range(D, k, paths, 0, total)
    else:
        chunk = -(-total // (workers * 4))
        bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        hit = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_range, D, k, paths, lo, hi) for lo, hi in bounds]
            for fut in futures:  # in counter order: first hit is the lowest
                res = fut.result()
                if res is not None:
                    hit = res
                    for f in futures:
                        f.cancel()
                    break
    return None if hit is None else _decode(hit, k, m)


def _number(D: Digraph, cap: int, paths: bool, workers: Optional[int]) -> NumberResult:
    if not is_strong(D):
        raise NotStrongError("digraph is not strong; the connection number is undefined")
    if cap < 1:
        raise ValueError("cap must be at least 1")
    workers = _threads() if workers is None else workers
    if D.n == 1:
        return NumberResult(1, ArcColoring((), 1), cap)
    for k in range(1, cap + 1):
        colors = _search(D, k, paths, workers)
        if colors is not None:
            return NumberResult(k, ArcColoring(colors, k), cap)
    return NumberResult(None, None, cap)


def pc_number(D: Digraph, cap: int = 3, workers: Optional[int] = None) -> NumberResult:
    """Proper connection number by exhaustive search over colorings with at most ``cap`` colors."""
    return _number(D, cap, True, workers)


def wc_number(D: Digraph, cap: int = 3, workers: Optional[int] = None) -> NumberResult:
    """Proper-walk connection number; the per-coloring check is polynomial."""
    return _number(D, cap, False, workers)


def all_colorings(m: int, k: int, pin_first: bool = True) -> Iterable[tuple[int, ...]]:
    """Every coloring in counter order, optionally with arc 0 pinned to color 1."""
    if m == 0:
        yield ()
        return
    head = (1,) if pin_first else range(1, k + 1)
    for first in head:
        for rest in itertools.product(range(1, k + 1), repeat=m - 1):
            yield (first,) + rest
