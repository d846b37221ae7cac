"""Dominated/dominating nonadjacent pairs and the degree-sum hypotheses.

All inequalities are evaluated in integers; the ``5n/2 - 11/2`` bound is
tested as ``2 * (d(u) + d(v)) >= 5n - 11``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .digraph import Digraph, DigraphError, _bits, is_strong, nonadjacent_pairs, recognize_semicomplete_multipartite


@dataclass(frozen=True)
class PairClassification:
    pair: tuple[int, int]
    dominated_by: frozenset[int]
    dominates: frozenset[int]
    degree_sum: int
    mixed_min: int

    @property
    def dominated(self) -> bool:
        return bool(self.dominated_by)

    @property
    def dominating(self) -> bool:
        return bool(self.dominates)

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "dominated_by": sorted(self.dominated_by),
            "dominates": sorted(self.dominates),
            "degree_sum": self.degree_sum,
            "mixed_min": self.mixed_min,
        }


def classify_pair(D: Digraph, u: int, v: int) -> PairClassification:
    din_u, dout_u = D.in_rows[u].bit_count(), D.out_rows[u].bit_count()
    din_v, dout_v = D.in_rows[v].bit_count(), D.out_rows[v].bit_count()
    return PairClassification(
        pair=(u, v),
        dominated_by=frozenset(_bits(D.in_rows[u] & D.in_rows[v])),
        dominates=frozenset(_bits(D.out_rows[u] & D.out_rows[v])),
        degree_sum=din_u + dout_u + din_v + dout_v,
        mixed_min=min(din_u + dout_v, dout_u + din_v),
    )


def classify_pairs(D: Digraph) -> list[PairClassification]:
    """One record per nonadjacent pair, in lexicographic pair order."""
    return [classify_pair(D, u, v) for u, v in nonadjacent_pairs(D)]


class Hypothesis(str, enum.Enum):
    BJM_2N3 = "bjm-2n3"
    C12_DOMINATED = "c12"
    C13_DOM_OR_DOM = "c13"
    T24_SMD = "t24-smd"
    T25_MIN = "t25-min"
    T26_5N2 = "t26-5n2"

    @classmethod
    def parse(cls, value: "str | Hypothesis") -> "Hypothesis":
        try:
            return cls(value)
        except ValueError:
            known = ", ".join(h.value for h in cls)
            raise DigraphError(f"unknown hypothesis {value!r}; expected one of {known}") from None

    @property
    def proved(self) -> bool:
        return self not in (Hypothesis.C12_DOMINATED, Hypothesis.C13_DOM_OR_DOM)

    def in_scope(self, pc: PairClassification) -> bool:
        if self is Hypothesis.BJM_2N3:
            return True
        if self in (Hypothesis.C12_DOMINATED, Hypothesis.T24_SMD):
            return pc.dominated
        return pc.dominated or pc.dominating

    def satisfied_by(self, pc: PairClassification, n: int) -> bool:
        if self is Hypothesis.T26_5N2:
            return 2 * pc.degree_sum >= 5 * n - 11
        ok = pc.degree_sum >= 2 * n - 3
        if self is Hypothesis.T25_MIN:
            ok = ok and pc.mixed_min >= n - 2
        return ok


HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class HypothesisResult:
    hypothesis: Hypothesis
    status: str
    violator: PairClassification | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == HOLDS

    def to_json(self) -> dict:
        return {
            "hypothesis": self.hypothesis.value,
            "status": self.status,
            "violator": list(self.violator.pair) if self.violator else None,
            "reason": self.reason,
        }


def hypothesis_holds(
    D: Digraph, h: Hypothesis | str, pairs: list[PairClassification] | None = None
) -> HypothesisResult:
    """Evaluate hypothesis ``h`` on ``D``.

    Non-strong digraphs (and non-multipartite ones for ``t24-smd``) give
    ``not_applicable``, which is falsy but distinct from ``fails``.
    """
    h = Hypothesis.parse(h)
    if not is_strong(D):
        return HypothesisResult(h, NOT_APPLICABLE, reason="not strong")
    if h is Hypothesis.T24_SMD and not recognize_semicomplete_multipartite(D):
        return HypothesisResult(h, NOT_APPLICABLE, reason="not semicomplete multipartite")
    if h is Hypothesis.T26_5N2 and D.n < 2:
        return HypothesisResult(h, NOT_APPLICABLE, reason="needs n >= 2")
    if pairs is None:
        pairs = classify_pairs(D)
    for pc in pairs:
        if h.in_scope(pc) and not h.satisfied_by(pc, D.n):
            return HypothesisResult(h, FAILS, pc)
    return HypothesisResult(h, HOLDS)


@dataclass(frozen=True)
class AuditEntry:
    """Worst-pair slack for one hypothesis; ``margins`` is empty when vacuous.

    Margins for the ``5n/2`` bounds are in doubled units (``2*sum - (5n - c)``).
    """

    hypothesis: Hypothesis
    scope_size: int
    margins: dict
    worst_pair: tuple[int, int] | None

    @property
    def vacuous(self) -> bool:
        return self.scope_size == 0

    def to_json(self) -> dict:
        return {
            "scope_size": self.scope_size,
            "vacuous": self.vacuous,
            "margins": dict(self.margins),
            "worst_pair": list(self.worst_pair) if self.worst_pair else None,
        }


def sharpness_audit(D: Digraph) -> dict[Hypothesis, AuditEntry]:
    """Slack between each hypothesis's bound and the tightest in-scope pair."""
    n = D.n
    pairs = classify_pairs(D)
    out = {}
    for h in Hypothesis:
        scope = [pc for pc in pairs if h.in_scope(pc)]
        if not scope:
            out[h] = AuditEntry(h, 0, {}, None)
            continue
        if h is Hypothesis.T26_5N2:
            worst = min(scope, key=lambda pc: pc.degree_sum)
            margins = {
                "bound_doubled": 2 * worst.degree_sum - (5 * n - 11),
                "weakened_bound_doubled": 2 * worst.degree_sum - (5 * n - 13),
            }
        elif h is Hypothesis.T25_MIN:
            worst = min(scope, key=lambda pc: (min(pc.degree_sum - (2 * n - 3), pc.mixed_min - (n - 2))))
            margins = {
                "degree_sum": min(pc.degree_sum for pc in scope) - (2 * n - 3),
                "mixed_min": min(pc.mixed_min for pc in scope) - (n - 2),
            }
        else:
            worst = min(scope, key=lambda pc: pc.degree_sum)
            margins = {"degree_sum": worst.degree_sum - (2 * n - 3)}
        out[h] = AuditEntry(h, len(scope), margins, worst.pair)
    return out
