"""The nonsupereulerian sharpness family D(n1, n2) and its property audit.

Vertex layout: ``u = 0``, ``v = 1``, the first block ``K*_{n1}`` occupies
``2 .. n1+1`` with ``w'`` its first vertex, and the second block ``K*_{n2}``
follows with ``w`` its first vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .conditions import classify_pairs
from .decider import NOT_SUPEREULERIAN, Guard, DEFAULT_GUARD, decide
from .digraph import (
    Digraph,
    DigraphError,
    degree,
    is_strong,
    recognize_semicomplete_multipartite,
    to_dot,
)

# (n1, n2) where 2*(d(u)+d(v)) >= 5n - 13 is known to hold
WEAKENED_T26_CASES = frozenset({(1, 1), (1, 2), (2, 1)})


@dataclass(frozen=True)
class FamilyParams:
    n1: int
    n2: int

    def __post_init__(self):
        for name in ("n1", "n2"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise DigraphError(f"{name} must be an integer >= 1, got {value!r}")

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + 2

    @property
    def expected_arc_count(self) -> int:
        n1, n2 = self.n1, self.n2
        return n1 * (n1 - 1) + n2 * (n2 - 1) + 1 + n2 * (n1 + 2) + 2 * n1


@dataclass(frozen=True)
class Family:
    params: FamilyParams
    digraph: Digraph = field(repr=False)
    u: int
    v: int
    w_prime: int
    w: int
    block1: tuple[int, ...]
    block2: tuple[int, ...]

    def labels(self) -> dict[int, str]:
        names = {self.u: "u", self.v: "v"}
        for k, x in enumerate(self.block1, start=1):
            names[x] = "w'" if x == self.w_prime else f"a{k}"
        for k, x in enumerate(self.block2, start=1):
            names[x] = "w" if x == self.w else f"b{k}"
        return names

    def to_dot(self) -> str:
        name = f"family_{self.params.n1}_{self.params.n2}"
        return to_dot(self.digraph, self.labels(), name=name)


def build_family(n1: int | FamilyParams, n2: int | None = None) -> Family:
    p = n1 if isinstance(n1, FamilyParams) else FamilyParams(n1, n2)
    u, v = 0, 1
    block1 = tuple(range(2, 2 + p.n1))
    block2 = tuple(range(2 + p.n1, 2 + p.n1 + p.n2))
    w_prime, w = block1[0], block2[0]
    arcs = set(permutations(block1, 2)) | set(permutations(block2, 2))
    arcs.add((w_prime, w))
    for b in block2:
        arcs.update((b, x) for x in (u, v) + block1)
    for x in (u, v):
        arcs.update((x, a) for a in block1)
    D = Digraph.from_arcs(p.n, sorted(arcs))
    return Family(p, D, u, v, w_prime, w, block1, block2)


@dataclass(frozen=True)
class AuditCheck:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class FamilyAudit:
    params: FamilyParams
    checks: tuple[AuditCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def mismatches(self) -> list[AuditCheck]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> AuditCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "n1": self.params.n1,
            "n2": self.params.n2,
            "n": self.params.n,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "expected": _jsonable(c.expected), "actual": _jsonable(c.actual), "ok": c.ok}
                for c in self.checks
            ],
        }


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(y) for y in x)
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def audit_family(n1: int | FamilyParams, n2: int | None = None, guard: Guard = DEFAULT_GUARD) -> FamilyAudit:
    """Recompute every claimed property of ``D(n1, n2)`` with exact integers."""
    fam = build_family(n1, n2)
    p, D, u, v = fam.params, fam.digraph, fam.u, fam.v
    n = p.n
    du, dv = degree(D, u), degree(D, v)
    pairs = classify_pairs(D)
    both = [pc for pc in pairs if pc.dominated and pc.dominating]
    uv = next((pc for pc in pairs if pc.pair == (u, v)), None)
    cert = recognize_semicomplete_multipartite(D)
    classes = frozenset(cert.classes) if cert else None
    expected_classes = frozenset([frozenset({u, v})] + [frozenset({x}) for x in fam.block1 + fam.block2])
    b2 = set(fam.block2)
    entering_block2 = frozenset((a, b) for a, b in D.arcs if b in b2 and a not in b2)
    degree_sum = du.total + dv.total

    checks = [
        AuditCheck("order", n, D.n),
        AuditCheck("arc_count", p.expected_arc_count, D.m),
        AuditCheck("strong", True, is_strong(D)),
        AuditCheck("verdict", NOT_SUPEREULERIAN, decide(D, guard).verdict),
        AuditCheck("nonadjacent_pairs", ((u, v),), tuple(pc.pair for pc in pairs)),
        AuditCheck("dominated_and_dominating_pairs", ((u, v),), tuple(pc.pair for pc in both)),
        AuditCheck("d(u)", n - 2, du.total),
        AuditCheck("d(v)", n - 2, dv.total),
        AuditCheck("d+(u)+d-(v)", n - 2, du.out_deg + dv.in_deg),
        AuditCheck("d+(v)+d-(u)", n - 2, dv.out_deg + du.in_deg),
        AuditCheck("degree_sum", 2 * n - 4, degree_sum),
        AuditCheck("mixed_min", n - 2, uv.mixed_min if uv else None),
        AuditCheck("dominated_by", frozenset(fam.block2), uv.dominated_by if uv else None),
        AuditCheck("dominates", frozenset(fam.block1), uv.dominates if uv else None),
        AuditCheck("multipartite_classes", expected_classes, classes),
        AuditCheck("arcs_entering_block2", frozenset({(fam.w_prime, fam.w)}), entering_block2),
        AuditCheck(
            "weakened_5n_bound",
            (p.n1, p.n2) in WEAKENED_T26_CASES,
            2 * degree_sum >= 5 * n - 13,
        ),
    ]
    return FamilyAudit(p, tuple(checks))
