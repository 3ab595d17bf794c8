"""Strong bipartite spanning subdigraphs of C_n({1,k}) for odd n >= 9 and odd k.

Each subcase grows an even base cycle by ears whose endpoints are already
built and whose interior vertices are new. Vertex expressions are written
as plain integers and reduced mod n when the plan is materialized.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .certificate import BipartiteSpanningCertificate
from .digraph import Digraph, VertexBipartition, make_circulant, two_color_underlying
from .errors import PreconditionError, VerificationError

SUBCASES = ("1.1", "1.2", "1.3.1", "1.3.2", "2", "3.1", "3.2", "3.3", "3.4", "3.5")


class ParityError(VerificationError):
    """An ear's length parity disagrees with the colors of its endpoints."""


def run(a: int, b: int) -> list[int]:
    """a, a+1, ..., b (empty when b < a)."""
    return list(range(a, b + 1))


@dataclass
class EarPlan:
    n: int
    k: int
    subcase: str
    base_cycle: list[int]
    ears: list[tuple[str, list[int]]] = field(default_factory=list)

    def add(self, label: str, vertices: list[int]) -> None:
        self.ears.append((label, vertices))

    def arcs(self) -> list[tuple[int, int]]:
        n = self.n
        cyc = [v % n for v in self.base_cycle]
        out = [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
        for _, ear in self.ears:
            ear = [v % n for v in ear]
            out.extend(zip(ear, ear[1:]))
        return out

    def materialize(self, D: Digraph) -> tuple[list[tuple[int, int]], list[int]]:
        """Check every plan invariant while building; return arcs and vertex sides."""
        n = self.n
        cyc = [v % n for v in self.base_cycle]
        if len(set(cyc)) != len(cyc):
            raise VerificationError(f"{self.subcase}: base cycle repeats a vertex")
        if len(cyc) % 2:
            raise ParityError(f"{self.subcase}: base cycle has odd length {len(cyc)}")
        side = [0] * n
        for i, v in enumerate(cyc):
            side[v] = 1 + i % 2
        arcs = []
        for i in range(len(cyc)):
            arcs.append(self._arc(D, cyc[i], cyc[(i + 1) % len(cyc)], "base cycle"))
        for label, ear in self.ears:
            ear = [v % n for v in ear]
            if len(ear) < 2:
                raise VerificationError(f"{self.subcase}: ear {label} has no arcs")
            start, end, inner = ear[0], ear[-1], ear[1:-1]
            if not side[start] or not side[end]:
                raise VerificationError(f"{self.subcase}: ear {label} is not anchored")
            if any(side[v] for v in inner) or len(set(inner)) != len(inner):
                raise VerificationError(f"{self.subcase}: ear {label} revisits a vertex")
            length = len(ear) - 1
            if (side[start] == side[end]) != (length % 2 == 0):
                raise ParityError(
                    f"{self.subcase}: internal parity violation on ear {label} {ear}")
            for i, v in enumerate(inner, 1):
                side[v] = side[start] if i % 2 == 0 else 3 - side[start]
            arcs.extend(self._arc(D, a, b, f"ear {label}") for a, b in zip(ear, ear[1:]))
        if not all(side):
            missing = [v for v in range(n) if not side[v]]
            raise VerificationError(f"{self.subcase}: vertices {missing} never covered")
        return arcs, side

    def _arc(self, D: Digraph, a: int, b: int, where: str) -> tuple[int, int]:
        if (a, b) not in D.index:
            raise VerificationError(f"{self.subcase}: {where} uses non-arc {(a, b)}")
        return (a, b)


def lemma_subcase(n: int, k: int) -> str:
    """Which subcase of the construction handles C_n({1,k})."""
    _check_nk(n, k)
    alpha, r = divmod(n, k)
    if 3 * k - 2 <= n:
        if r <= k - 3:
            return "1.1"
        if r == k - 1:
            return "1.2"
        return "1.3.1" if alpha >= 4 else "1.3.2"
    if 2 * k + 1 <= n:
        return "2"
    d = n - k
    t, s = divmod(n, d + 1)
    if s == d:
        return "3.1"
    if t == 2:
        return "3.2" if s <= d - 2 else "3.3"
    return "3.4" if s <= d - 2 else "3.5"


def _check_nk(n: int, k: int) -> None:
    if n % 2 == 0 or k % 2 == 0:
        raise PreconditionError(f"n and k must be odd, got n={n}, k={k}")
    if n < 9:
        raise PreconditionError(f"construction needs n >= 9, got {n}")
    if not 3 <= k <= n - 1:
        raise PreconditionError(f"k must satisfy 3 <= k <= n-1, got k={k}")


def _join(*paths: list[int]) -> list[int]:
    out = list(paths[0])
    for p in paths[1:]:
        out.extend(p[1:])
    return out


def _closed(n: int, walk: list[int]) -> list[int]:
    if walk[0] % n != walk[-1] % n:
        raise VerificationError(f"walk {walk} does not close")
    return walk[:-1]


def ear_plan(n: int, k: int) -> EarPlan:
    """Plan for every subcase except 3.3, which is handled by relabelling."""
    sub = lemma_subcase(n, k)
    alpha, r = divmod(n, k)
    if sub == "1.1":
        p1 = [i * k for i in range(alpha - 1)]
        p3 = [(alpha - 2) * k] + run((alpha - 1) * k, (alpha - 1) * k + r + 1) + [1]
        p2 = [i * k + 1 for i in range(alpha - 1)]
        p4 = run((alpha - 2) * k + 1, (alpha - 2) * k + r + 2) + run((alpha - 1) * k + r + 2, n)
        plan = EarPlan(n, k, sub, _closed(n, _join(p1, p3, p2, p4)))
        plan.add("E0", [(alpha - 1) * k + r + 2] + run(2, k - 1) + [k])
        for i in range(1, alpha - 2):
            plan.add(f"E{i}", [(i - 1) * k + 2] + run(i * k + 2, (i + 1) * k - 1) + [(i + 1) * k])
        # Q is empty when r = k-3; E is then a single chord
        plan.add("E", [(alpha - 2) * k + r + 2]
                 + run((alpha - 2) * k + r + 3, (alpha - 1) * k - 1) + [alpha * k - 1])
        return plan
    if sub == "1.2":
        p1 = [i * k for i in range(alpha + 1)]
        p3 = [alpha * k, 1]
        p2 = [i * k + 1 for i in range(alpha + 1)]
        p4 = run(alpha * k + 1, alpha * k + k - 2) + [n]
        plan = EarPlan(n, k, sub, _closed(n, _join(p1, p3, p2, p4)))
        plan.add("E0", [alpha * k + 1] + run(2, k - 1) + [k])
        for i in range(1, alpha):
            plan.add(f"E{i}", [(i - 1) * k + 2] + run(i * k + 2, (i + 1) * k - 1) + [(i + 1) * k])
        return plan
    if sub == "1.3.1":
        p1 = [0] + run(k, 2 * k - 2) + [i * k - 2 for i in range(3, alpha)]
        p2 = run(1, k - 1) + [i * k - 1 for i in range(2, alpha)]
        p3 = [(alpha - 1) * k - 2, alpha * k - 2, alpha * k - 1, 1]
        p4 = [(alpha - 1) * k - 1, (alpha - 1) * k] + run(alpha * k, alpha * k + k - 3) + [n]
        plan = EarPlan(n, k, sub, _closed(n, _join(p1, p3, p2, p4)))
        for i in range(2, alpha - 1):
            plan.add(f"E{i}", [(i - 1) * k] + run(i * k, (i + 1) * k - 3) + [(i + 1) * k - 2])
        plan.add("E", [(alpha - 2) * k + 1] + run((alpha - 1) * k + 1, alpha * k - 3)
                 + [alpha * k - 2])
        return plan
    if sub == "1.3.2":
        plan = EarPlan(n, k, sub, [0, k] + run(2 * k, 3 * k - 4) + [k - 2, 2 * k - 2])
        plan.add("E1", [2 * k] + run(2, k - 3) + [k - 2])
        plan.add("E2", [k] + run(k + 1, 2 * k - 4) + [3 * k - 4])
        plan.add("E3", [0, 1, k + 1])
        plan.add("E4", [2 * k - 2, 2 * k - 1, 1])
        plan.add("E5", [k - 2, k - 1, 2 * k - 1])
        plan.add("E6", [3 * k - 4, 3 * k - 3, k - 1])
        plan.add("E7", [2 * k - 4, 2 * k - 3, 3 * k - 3])
        return plan
    if sub == "2":
        r = n - 2 * k
        plan = EarPlan(n, k, sub, [0] + run(k, k + r + 1) + run(1, r + 2) + run(k + r + 2, n - 1))
        plan.add("E", [k + 2 * r + 3] + run(r + 3, k - 1) + [k])
        return plan

    d = n - k
    t, s = divmod(n, d + 1)
    L = d + 1
    if sub == "3.1":
        walk = [n]
        for i in range(t):
            a = n - i * L
            walk += run(a - d, a - 1) + [a - L]
        plan = EarPlan(n, k, sub, walk)  # ends at x_d; the chord x_d x_0 closes it
        plan.add("E", [d + 1] + run(1, d))
        return plan
    if sub == "3.2":
        plan = EarPlan(n, k, sub, [0] + run(d + s + 2, 2 * d) + [d])
        plan.add("E", [d + s + 2] + run(s + 2, d))
        for i in range(s + 1):
            plan.add(f"E{i}", [2 * d + i, 2 * d + 1 + i, d + 1 + i, 1 + i, d + s + 3 + i])
        return plan
    if sub == "3.4":
        walk = [n]
        for i in range(t - 2):
            walk += run((t - i - 1) * L + s + 1, (t - i) * L + s - 1) + [(t - i - 1) * L + s]
        walk += run(d + s + 2, 2 * d) + [d]
        plan = EarPlan(n, k, sub, walk)
        plan.add("E1", [3 * d + 1] + run(2 * d + 1, 2 * d + s + 1) + [2 * d + s + 2])
        plan.add("E2", [2 * d + 1] + run(d + 1, d + s + 1) + [d + s + 2])
        plan.add("E3", [d + 1] + run(1, d))
        return plan
    if sub == "3.5":
        walk = [n]
        for i in range(t - 3):
            walk += (run((t - i) * d + t - i - 1, (t - i + 1) * d + t - i - 2)
                     + [(t - i) * d + t - i - 2])
        walk += run(3 * d + 2, 4 * d) + [3 * d, 2 * d, d]
        plan = EarPlan(n, k, sub, walk)
        plan.add("E1", [5 * d + 1, 4 * d + 1, 4 * d + 2])
        plan.add("E2", [4 * d + 1, 3 * d + 1, 3 * d + 2])
        plan.add("E3", [3 * d + 1] + run(2 * d + 1, 3 * d))
        plan.add("E4", [2 * d + 1] + run(d + 1, 2 * d))
        plan.add("E5", [d + 1] + run(1, d))
        return plan
    raise PreconditionError(f"subcase {sub} has no direct ear plan")


def _times_k_isomorphism(n: int, k: int) -> list[int]:
    """j -> jk mod n, which carries C_n({1,3}) onto C_n({1,k}) when 3k = 1 mod n."""
    phi = [j * k % n for j in range(n)]
    src, dst = make_circulant(n, [1, 3]), make_circulant(n, [1, k])
    if src.relabel(phi) != dst:
        raise VerificationError(f"x -> {k}x is not an isomorphism C_{n}(1,3) -> C_{n}(1,{k})")
    return phi


def circulant_bipartite_subdigraph(n: int, k: int) -> BipartiteSpanningCertificate:
    """Certificate (arcs, bipartition) for C_n({1,k}), n and k odd, n >= 9."""
    _check_nk(n, k)
    D = make_circulant(n, [1, k])
    sub = lemma_subcase(n, k)
    if sub == "3.3":
        inner = circulant_bipartite_subdigraph(n, 3)
        phi = _times_k_isomorphism(n, k)
        arcs = [(phi[a], phi[b]) for a, b in inner.arcs]
    else:
        arcs, _ = ear_plan(n, k).materialize(D)
    parts = two_color_underlying(D, arcs)
    if parts is None:
        raise VerificationError(f"{sub}: arc union has an odd closed walk")
    cert = BipartiteSpanningCertificate(tuple(sorted(set(arcs))), parts, f"subcase {sub}")
    return cert.verified(D)
