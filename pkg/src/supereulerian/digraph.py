"""Dense bitmask digraphs: degrees, strong connectivity, multipartite recognition.

Vertices are the integers ``0..n-1``.  Row ``i`` of the adjacency is an int
whose bit ``j`` is set iff the arc ``(i, j)`` is present.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence


class DigraphError(ValueError):
    """Invalid digraph input (bad vertex, loop, duplicate arc, parse failure)."""


class DegreeRecord(NamedTuple):
    in_deg: int
    out_deg: int

    @property
    def total(self) -> int:
        return self.in_deg + self.out_deg


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Digraph:
    """Immutable loopless digraph without parallel arcs.

    Build one with :meth:`from_arcs`; ``out_rows`` and ``in_rows`` hold the
    out- and in-neighbourhoods as bitmasks.
    """

    __slots__ = ("n", "out_rows", "in_rows", "_arcs")

    def __init__(self, n: int, out_rows: Sequence[int]):
        if n < 0:
            raise DigraphError(f"vertex count must be non-negative, got {n}")
        if len(out_rows) != n:
            raise DigraphError(f"expected {n} adjacency rows, got {len(out_rows)}")
        full = (1 << n) - 1
        in_rows = [0] * n
        for i, row in enumerate(out_rows):
            if row & ~full:
                raise DigraphError(f"row {i} references a vertex outside 0..{n - 1}")
            if row >> i & 1:
                raise DigraphError(f"loop at vertex {i}")
            for j in _bits(row):
                in_rows[j] |= 1 << i
        self.n = n
        self.out_rows = tuple(out_rows)
        self.in_rows = tuple(in_rows)
        self._arcs: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for a, b in arcs:
            if not (0 <= a < n and 0 <= b < n):
                raise DigraphError(f"arc ({a}, {b}) out of range for n={n}")
            if a == b:
                raise DigraphError(f"loop at vertex {a}")
            if rows[a] >> b & 1:
                raise DigraphError(f"duplicate arc ({a}, {b})")
            rows[a] |= 1 << b
        return cls(n, rows)

    @classmethod
    def dicycle(cls, n: int) -> "Digraph":
        if n < 2:
            raise DigraphError("a dicycle needs at least 2 vertices")
        return cls.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def dipath(cls, n: int) -> "Digraph":
        return cls.from_arcs(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << i) for i in range(n)])

    @classmethod
    def from_code(cls, n: int, code: int) -> "Digraph":
        """Inverse of :attr:`code`."""
        rows = [0] * n
        for p, (i, j) in enumerate(combinations(range(n), 2)):
            state = code >> (2 * p) & 3
            if state & 1:
                rows[i] |= 1 << j
            if state & 2:
                rows[j] |= 1 << i
        if code >> (n * (n - 1)):
            raise DigraphError(f"code {code} out of range for n={n}")
        return cls(n, rows)

    @property
    def code(self) -> int:
        """Base-4 pair-state code; digit ``p`` describes the ``p``-th pair ``i < j``.

        Digit values: 0 no arc, 1 ``i->j``, 2 ``j->i``, 3 both.
        """
        code = 0
        for p, (i, j) in enumerate(combinations(range(self.n), 2)):
            state = (self.out_rows[i] >> j & 1) | (self.out_rows[j] >> i & 1) << 1
            code |= state << (2 * p)
        return code

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """All arcs in lexicographic ``(tail, head)`` order."""
        if self._arcs is None:
            self._arcs = tuple((i, j) for i in range(self.n) for j in _bits(self.out_rows[i]))
        return self._arcs

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.out_rows)

    def has_arc(self, a: int, b: int) -> bool:
        return bool(self.out_rows[a] >> b & 1)

    def adjacent(self, a: int, b: int) -> bool:
        return bool((self.out_rows[a] | self.in_rows[a]) >> b & 1)

    def out_neighbors(self, v: int) -> list[int]:
        return list(_bits(self.out_rows[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(_bits(self.in_rows[v]))

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise DigraphError(f"vertex {v!r} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_rows == other.out_rows

    def __hash__(self) -> int:
        return hash((self.n, self.out_rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


def degree(D: Digraph, v: int) -> DegreeRecord:
    D.check_vertex(v)
    return DegreeRecord(D.in_rows[v].bit_count(), D.out_rows[v].bit_count())


def degree_toward(D: Digraph, v: int, S: Iterable[int]) -> DegreeRecord:
    """Degree of ``v`` counting only arcs to or from members of ``S``."""
    D.check_vertex(v)
    S = list(S)
    for s in S:
        D.check_vertex(s)
    mask = vertex_mask(S)
    return DegreeRecord((D.in_rows[v] & mask).bit_count(), (D.out_rows[v] & mask).bit_count())


def _reach(rows: Sequence[int], start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strong(D: Digraph) -> bool:
    if D.n < 1:
        raise DigraphError("strong connectivity needs at least one vertex")
    full = (1 << D.n) - 1
    return _reach(D.out_rows, 0) == full and _reach(D.in_rows, 0) == full


def strong_components(D: Digraph) -> list[frozenset[int]]:
    """Strong components, each as a frozenset, ordered by smallest member."""
    remaining = (1 << D.n) - 1
    comps = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        comp = _reach(D.out_rows, v) & _reach(D.in_rows, v)
        comps.append(frozenset(_bits(comp)))
        remaining &= ~comp
    return comps


def nonadjacent_pairs(D: Digraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(D.n), 2) if not D.adjacent(u, v)]


@dataclass(frozen=True)
class PartitionCertificate:
    """Partite sets of a semicomplete multipartite digraph."""

    classes: tuple[frozenset[int], ...]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotMultipartite:
    """Witness ``(a, b, c)``: a~c and b~c nonadjacent, but a and b adjacent."""

    a: int
    b: int
    c: int

    def __bool__(self) -> bool:
        return False


def recognize_semicomplete_multipartite(D: Digraph) -> PartitionCertificate | NotMultipartite:
    """Partition ``D`` into partite sets, or show nonadjacency is not transitive.

    ``D`` is semicomplete multipartite exactly when "equal or nonadjacent" is an
    equivalence relation.  The result is truthy only for a certificate.
    """
    full = (1 << D.n) - 1
    non = [full & ~(D.out_rows[v] | D.in_rows[v]) for v in range(D.n)]  # includes v itself
    classes = []
    assigned = 0
    for c in range(D.n):
        if assigned >> c & 1:
            continue
        cls = non[c]
        for x in _bits(cls):
            if non[x] != cls:
                # x is nonadjacent to c, and y is nonadjacent to exactly one of them
                diff = non[x] ^ cls
                y = (diff & -diff).bit_length() - 1
                if cls >> y & 1:
                    return NotMultipartite(*sorted((x, y)), c)
                return NotMultipartite(*sorted((c, y)), x)
        classes.append(frozenset(_bits(cls)))
        assigned |= cls
    return PartitionCertificate(tuple(classes))


# --- edge-list text format -------------------------------------------------


def parse_edge_list(text: str) -> Digraph:
    """Parse the ``n <count>`` / ``a b`` edge-list format."""
    n = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise DigraphError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            n = int(fields[1])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise DigraphError(f"line {lineno}: expected 'a b' with integer vertices, got {raw!r}")
        a, b = int(fields[0]), int(fields[1])
        if not (a < n and b < n):
            raise DigraphError(f"line {lineno}: arc ({a}, {b}) out of range for n={n}")
        if a == b:
            raise DigraphError(f"line {lineno}: loop at vertex {a}")
        if (a, b) in seen:
            raise DigraphError(f"line {lineno}: duplicate arc ({a}, {b})")
        seen.add((a, b))
        arcs.append((a, b))
    if n is None:
        raise DigraphError("missing 'n <count>' header")
    return Digraph.from_arcs(n, arcs)


def format_edge_list(D: Digraph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {D.n}")
    lines.extend(f"{a} {b}" for a, b in D.arcs)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Digraph:
    with open(path, encoding="ascii", newline="") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(D: Digraph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(D, comments))


def to_dot(D: Digraph, labels: dict[int, str] | None = None, name: str = "D") -> str:
    """Graphviz DOT text; antiparallel arcs stay two separate edges."""
    labels = labels or {}
    out = [f"digraph {name} {{"]
    for v in range(D.n):
        if v in labels:
            out.append(f'  {v} [label="{labels[v]}"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {a} -> {b};" for a, b in D.arcs)
    out.append("}")
    return "\n".join(out) + "\n"
