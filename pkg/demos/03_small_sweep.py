"""Check each degree condition against every strong digraph on four vertices, then a seeded random sample on six."""
from supereulerian import Hypothesis, PopulationSpec, verify_many
from supereulerian.enumeration import dumps_report

spec = PopulationSpec(4, strong_only=True)
for r in verify_many(spec, list(Hypothesis)):
    t = r.tally
    print(f"{r.hypothesis.value:8s} strong {t.strong:5d} satisfying {t.satisfying:5d} "
          f"supereulerian {t.supereulerian:5d} counterexamples {len(t.counterexamples)}")

# n = 6 is too large to enumerate, so sample it
spec = PopulationSpec(6, mode="random", count=3000, seed=1, density=0.6)
(report,) = verify_many(spec, [Hypothesis.C12_DOMINATED])
print(dumps_report(report.to_json()))
