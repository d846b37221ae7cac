"""Exit criteria.  Each test records one PASS/FAIL line shown in the summary.

The n <= 5 exhaustive sweeps run once per module: one pass for the five
strong-only hypotheses and one for the multipartite population.
"""
import io
import random
import time
from contextlib import redirect_stdout

import pytest

from supereulerian import (
    Digraph,
    Hypothesis,
    PopulationSpec,
    audit_family,
    build_family,
    decide,
    decide_bruteforce,
    hypothesis_holds,
    verify_many,
)
from supereulerian.cli import main
from supereulerian.decider import NOT_SUPEREULERIAN
from supereulerian.digraph import parse_edge_list
from supereulerian.enumeration import (
    dumps_report,
    lemma_trials,
    random_digraph,
    write_counterexamples,
)

H = Hypothesis
STRONG_HYPS = [H.BJM_2N3, H.C12_DOMINATED, H.C13_DOM_OR_DOM, H.T25_MIN, H.T26_5N2]


def _timed_sweep(spec, hyps):
    t0 = time.perf_counter()
    reports = verify_many(spec, hyps)
    return {r.hypothesis: r for r in reports}, time.perf_counter() - t0


@pytest.fixture(scope="module")
def strong_sweeps():
    """{n: ({hypothesis: report}, seconds)} for strong-only populations, n = 2..5."""
    return {n: _timed_sweep(PopulationSpec(n, strong_only=True), STRONG_HYPS) for n in range(2, 6)}


@pytest.fixture(scope="module")
def smd_sweeps():
    spec = lambda n: PopulationSpec(n, strong_only=True, smd_only=True)
    return {n: _timed_sweep(spec(n), [H.T24_SMD]) for n in range(2, 6)}


def test_1_decider_matches_bruteforce(accept):
    t0 = time.perf_counter()
    exhaustive = disagree = 0
    for n in range(1, 5):
        for code in range(4 ** (n * (n - 1) // 2)):
            D = Digraph.from_code(n, code)
            exhaustive += 1
            disagree += decide(D).verdict != decide_bruteforce(D).verdict
    rng = random.Random(20240601)
    sampled = negatives = 0
    while sampled < 10_000:
        D = random_digraph(rng, rng.randint(2, 6), 0.5)
        if D.m > 20:
            continue
        sampled += 1
        a, b = decide(D), decide_bruteforce(D)
        disagree += a.verdict != b.verdict
        negatives += a.verdict == NOT_SUPEREULERIAN
    elapsed = time.perf_counter() - t0
    accept(
        "1",
        disagree == 0 and exhaustive == 1 + 4 + 64 + 4096 and elapsed < 300,
        f"exhaustive={exhaustive} random={sampled} strong-nonsupereulerian={negatives} "
        f"disagreements={disagree} time={elapsed:.1f}s",
    )


def test_2_bjm_sweep(strong_sweeps, accept):
    r4, _ = strong_sweeps[4]
    r5, t5 = strong_sweeps[5]
    ce = len(r4[H.BJM_2N3].tally.counterexamples) + len(r5[H.BJM_2N3].tally.counterexamples)
    accept(
        "2",
        ce == 0 and t5 < 1800 and r5[H.BJM_2N3].tally.strong == 565080,
        f"n=4 satisfying={r4[H.BJM_2N3].tally.satisfying} n=5 satisfying={r5[H.BJM_2N3].tally.satisfying} "
        f"counterexamples={ce} shared n=5 pass {t5:.1f}s",
    )


def test_3_t24_sweep(smd_sweeps, accept):
    ce = sum(len(reports[H.T24_SMD].tally.counterexamples) for reports, _ in smd_sweeps.values())
    sat = {n: reports[H.T24_SMD].tally.satisfying for n, (reports, _) in smd_sweeps.items()}
    accept("3", ce == 0 and all(v > 0 for v in sat.values()), f"satisfying={sat} counterexamples={ce}")


def test_4_t25_t26_sweeps(strong_sweeps, accept):
    ce = {
        h.value: sum(len(reports[h].tally.counterexamples) for reports, _ in strong_sweeps.values())
        for h in (H.T25_MIN, H.T26_5N2)
    }
    crossover = 5 * 5 - 11 == 4 * 5 - 6 == 14
    r5 = strong_sweeps[5][0]
    same_population = r5[H.T26_5N2].tally.satisfying == r5[H.C13_DOM_OR_DOM].tally.satisfying
    accept(
        "4",
        not any(ce.values()) and crossover and same_population,
        f"counterexamples={ce} crossover 5n-11=4n-6=14 at n=5: {crossover}",
    )


def test_5_conjecture_runs(strong_sweeps, tmp_path, accept):
    found = {}
    reverified = True
    for h in (H.C12_DOMINATED, H.C13_DOM_OR_DOM):
        found[h.value] = {}
        for n, (reports, _) in strong_sweeps.items():
            r = reports[h]
            assert r.complete
            dumps_report(r.to_json())
            found[h.value][n] = len(r.tally.counterexamples)
            for path in write_counterexamples(r, tmp_path / h.value):
                D = parse_edge_list(path.read_text(encoding="ascii"))
                reverified &= bool(hypothesis_holds(D, h)) and decide(D).verdict == NOT_SUPEREULERIAN
    accept("5", reverified, f"counterexamples by n: {found} (recorded outcome)")


def test_6_family_reproduction(accept):
    failures = []
    weakened = {}
    for n1 in (1, 2, 3):
        for n2 in (1, 2, 3):
            audit = audit_family(n1, n2)
            failures += [(n1, n2, c.name) for c in audit.mismatches()]
            n = audit.params.n
            doubled = 2 * audit["degree_sum"].actual
            weakened[(n1, n2)] = doubled - (5 * n - 13)
    holds = {p for p, margin in weakened.items() if margin >= 0}
    equal = {p for p, margin in weakened.items() if margin == 0}
    ok = not failures and holds == {(1, 1), (1, 2), (2, 1)} and equal == {(1, 2), (2, 1)}
    accept("6", ok, f"audit mismatches={failures} weakened bound holds for {sorted(holds)}, equality {sorted(equal)}")


def test_7_lemma_suites(accept):
    report = lemma_trials(10_000, seed=7, max_n=6, smd_max_n=4)
    st, sx, smd = report["lemma_notST"], report["corollary_notSx"], report["smd_lemma"]
    ok = (
        st["trials"] == sx["trials"] == 10_000
        and report["violations"] == 0
        and smd["checked"] > 0
        and st["premise_true"] > 0
        and sx["premise_true"] > 0
    )
    accept(
        "7",
        ok,
        f"notST {st['trials']} trials ({st['premise_true']} with premise) violations={st['violations']}; "
        f"notSx {sx['trials']} ({sx['premise_true']}) violations={sx['violations']}; "
        f"smd n<=4 checked={smd['checked']} violations={smd['violations']}",
    )


def _cli_stdout(args):
    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = main(args)
    return rc, buf.getvalue().encode("utf-8")


def test_8_determinism(accept):
    runs = [
        ["verify", "--hypothesis", "c13", "--n", "6", "--random", "2000", "--seed", "11"],
        ["verify", "--hypothesis", "t24-smd", "--n", "4", "--exhaustive", "--smd-only"],
        ["lemma-test", "--trials", "500", "--seed", "3", "--max-n", "6"],
    ]
    identical = []
    for args in runs:
        first, second = _cli_stdout(args), _cli_stdout(args)
        identical.append(first == second and first[0] == 0 and len(first[1]) > 0)
    fam = build_family(2, 2)
    a, b = decide(fam.digraph).to_json(), decide(fam.digraph).to_json()
    identical.append(dumps_report(a) == dumps_report(b))
    accept("8", all(identical), f"byte-identical reruns: {identical}")
