"""Ditrails, arc subsets, and executable checks of the trail lemmas."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .digraph import (
    Digraph,
    DigraphError,
    _bits,
    recognize_semicomplete_multipartite,
    vertex_mask,
)


@dataclass(frozen=True)
class Ditrail:
    """Arc-distinct directed walk in ``host``.

    ``vertices`` is the visiting sequence ``v0 v1 ... vk``; a single vertex is
    the length-0 ditrail.
    """

    host: Digraph = field(repr=False, compare=False)
    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise DigraphError("a ditrail needs at least one vertex")
        for v in self.vertices:
            self.host.check_vertex(v)
        seen = set()
        for arc in self.arcs:
            if not self.host.has_arc(*arc):
                raise DigraphError(f"arc {arc} is not in the host digraph")
            if arc in seen:
                raise DigraphError(f"arc {arc} repeats; not a ditrail")
            seen.add(arc)

    @classmethod
    def of(cls, host: Digraph, *vertices: int) -> "Ditrail":
        return cls(host, tuple(vertices))

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(zip(vs, vs[1:]))

    @property
    def initial(self) -> int:
        return self.vertices[0]

    @property
    def terminal(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def is_closed(self) -> bool:
        return self.initial == self.terminal

    def sub(self, i: int, j: int) -> "Ditrail":
        """Sub-ditrail between positions ``i <= j`` of the vertex sequence."""
        if not 0 <= i <= j < len(self.vertices):
            raise DigraphError(f"bad slice [{i}, {j}] of a ditrail of length {self.length}")
        return Ditrail(self.host, self.vertices[i : j + 1])

    def __str__(self) -> str:
        return format_vertex_sequence(self.vertices)


def format_vertex_sequence(vertices: Sequence[int]) -> str:
    return " -> ".join(str(v) for v in vertices)


@dataclass(frozen=True)
class ArcSubset:
    """A subset of the host's arcs, e.g. a candidate spanning eulerian subdigraph."""

    host: Digraph = field(repr=False, compare=False)
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for arc in self.arcs:
            if not self.host.has_arc(*arc):
                raise DigraphError(f"arc {arc} is not in the host digraph")

    @classmethod
    def of(cls, host: Digraph, arcs: Iterable[tuple[int, int]]) -> "ArcSubset":
        return cls(host, frozenset(tuple(a) for a in arcs))

    @classmethod
    def from_mask(cls, host: Digraph, mask: int) -> "ArcSubset":
        """Subset selected by bit ``k`` <-> ``host.arcs[k]``."""
        return cls(host, frozenset(host.arcs[k] for k in _bits(mask)))

    @property
    def mask(self) -> int:
        return sum(1 << k for k, arc in enumerate(self.host.arcs) if arc in self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)


def is_spanning_eulerian(D: Digraph, F: ArcSubset | Iterable[tuple[int, int]]) -> bool:
    """True iff ``(V(D), F)`` is balanced, covers every vertex and is weakly connected.

    On a single vertex the empty set qualifies (the length-0 closed ditrail).
    """
    arcs = F.arcs if isinstance(F, ArcSubset) else frozenset(F)
    n = D.n
    outd = [0] * n
    ind = [0] * n
    nbr = [0] * n
    for a, b in arcs:
        if not D.has_arc(a, b):
            return False
        outd[a] += 1
        ind[b] += 1
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    if n == 1:
        return True
    if any(o != i or o == 0 for o, i in zip(outd, ind)):
        return False
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= nbr[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def eulerian_circuit(D: Digraph, F: ArcSubset | Iterable[tuple[int, int]]) -> list[int]:
    """Hierholzer walk through every arc of a balanced connected arc set.

    Used for printing certificates; starts at the smallest tail.
    """
    arcs = sorted(F.arcs if isinstance(F, ArcSubset) else F)
    if not arcs:
        return [0] if D.n == 1 else []
    succ: dict[int, list[int]] = {}
    for a, b in reversed(arcs):
        succ.setdefault(a, []).append(b)
    stack = [arcs[0][0]]
    circuit = []
    while stack:
        v = stack[-1]
        if succ.get(v):
            stack.append(succ[v].pop())
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    if len(circuit) != len(arcs) + 1:
        raise DigraphError("arc set is not a single closed ditrail")
    return circuit


def exists_ditrail_with_vertex_set(
    D: Digraph, a: int, b: int, U: Iterable[int], witness: bool = False
):
    """Is there an ``(a, b)``-ditrail whose vertex set is exactly ``U``?

    Depth-first search over arc-distinct walks inside ``D[U]``.  With
    ``witness=True`` returns the :class:`Ditrail` or ``None`` instead of a bool.
    """
    U = frozenset(U)
    for v in U:
        D.check_vertex(v)
    if a not in U or b not in U:
        raise DigraphError("both endpoints must lie in U")
    umask = vertex_mask(U)
    rows = [D.out_rows[v] & umask if umask >> v & 1 else 0 for v in range(D.n)]
    # arc (x, y) <-> bit x*n + y of the used-arc mask
    n = D.n
    failed: set[tuple[int, int]] = set()
    path = [a]

    def residual_reaches_all(cur: int, used: int, visited: int) -> bool:
        need = umask & ~visited
        seen = frontier = 1 << cur
        while frontier:
            nxt = 0
            for x in _bits(frontier):
                nxt |= rows[x] & ~(used >> (x * n)) & ((1 << n) - 1)
            frontier = nxt & ~seen
            seen |= frontier
        return need & ~seen == 0 and bool(seen >> b & 1)

    def dfs(cur: int, used: int, visited: int) -> bool:
        if cur == b and visited == umask:
            return True
        if (cur, used) in failed:
            return False
        if not residual_reaches_all(cur, used, visited):
            failed.add((cur, used))
            return False
        for nxt in _bits(rows[cur]):
            bit = 1 << (cur * n + nxt)
            if used & bit:
                continue
            path.append(nxt)
            if dfs(nxt, used | bit, visited | 1 << nxt):
                return True
            path.pop()
        failed.add((cur, used))
        return False

    found = dfs(a, 0, 1 << a)
    if witness:
        return Ditrail(D, tuple(path)) if found else None
    return found


# --- lemma checkers ----------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """Outcome of evaluating one proved implication on a concrete input.

    ``premise`` is whether the "no such ditrail" hypothesis held; ``lhs <= rhs``
    is the conclusion.  ``witness`` is the ditrail refuting the premise, or the
    violating triple for the multipartite check.
    """

    holds: bool
    lhs: int | None = None
    rhs: int | None = None
    premise: bool | None = None
    witness: object = None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "violated"

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, Ditrail):
            w = str(w)
        elif isinstance(w, tuple):
            w = list(w)
        return {"verdict": self.verdict, "lhs": self.lhs, "rhs": self.rhs, "witness": w}


def _require_ditrail(D: Digraph, t: Ditrail, name: str) -> None:
    if not isinstance(t, Ditrail):
        raise DigraphError(f"{name} must be a Ditrail")
    if t.host != D:
        raise DigraphError(f"{name} is not a ditrail of this digraph")


def check_lemma_notST(D: Digraph, S: Ditrail, T: Ditrail) -> CheckResult:
    """No (first(S), last(S))-ditrail on V(S) | V(T)  =>  d-_S(first(T)) + d+_S(last(T)) <= |V(S)|."""
    _require_ditrail(D, S, "S")
    _require_ditrail(D, T, "T")
    if set(S.arcs) & set(T.arcs):
        raise DigraphError("S and T share an arc")
    smask = vertex_mask(S.vertex_set)
    lhs = (D.in_rows[T.initial] & smask).bit_count() + (D.out_rows[T.terminal] & smask).bit_count()
    rhs = len(S.vertex_set)
    trail = exists_ditrail_with_vertex_set(
        D, S.initial, S.terminal, S.vertex_set | T.vertex_set, witness=True
    )
    premise = trail is None
    return CheckResult(not premise or lhs <= rhs, lhs, rhs, premise, trail)


def check_corollary_notSx(D: Digraph, S: Ditrail, x: int) -> CheckResult:
    """No (first(S), last(S))-ditrail on V(S) + x  =>  d_S(x) <= |V(S)|."""
    _require_ditrail(D, S, "S")
    D.check_vertex(x)
    smask = vertex_mask(S.vertex_set)
    lhs = ((D.in_rows[x] & smask).bit_count() + (D.out_rows[x] & smask).bit_count())
    rhs = len(S.vertex_set)
    trail = exists_ditrail_with_vertex_set(
        D, S.initial, S.terminal, S.vertex_set | {x}, witness=True
    )
    premise = trail is None
    return CheckResult(not premise or lhs <= rhs, lhs, rhs, premise, trail)


def check_smd_lemma(D: Digraph) -> CheckResult:
    """Every vertex outside an adjacent pair has an arc to or from the pair."""
    if not recognize_semicomplete_multipartite(D):
        raise DigraphError("digraph is not semicomplete multipartite")
    adj = [D.out_rows[v] | D.in_rows[v] for v in range(D.n)]
    for u in range(D.n):
        for v in _bits(adj[u] >> (u + 1) << (u + 1)):
            covered = adj[u] | adj[v] | 1 << u | 1 << v
            missing = ((1 << D.n) - 1) & ~covered
            if missing:
                w = (missing & -missing).bit_length() - 1
                return CheckResult(False, witness=(u, v, w))
    return CheckResult(True)
