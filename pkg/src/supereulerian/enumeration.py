"""Digraph populations, implication sweeps, checkpoints and lemma trials."""
from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from . import batch
from .conditions import Hypothesis, hypothesis_holds
from .decider import DEFAULT_GUARD, NOT_STRONG, Guard, SizeGuardError, decide
from .digraph import Digraph, format_edge_list, parse_edge_list, recognize_semicomplete_multipartite
from .trails import Ditrail, check_corollary_notSx, check_lemma_notST, check_smd_lemma

EXHAUSTIVE = "exhaustive"
RANDOM = "random"
CHUNK = 1 << 15


class CheckpointError(Exception):
    """Checkpoint is unreadable or belongs to a different sweep."""


@dataclass(frozen=True)
class PopulationSpec:
    """Which digraphs a sweep visits.

    ``dedup`` keeps only the minimum-code member of each isomorphism class
    (exhaustive mode only).  ``density`` is the per-arc probability in random
    mode.
    """

    n: int
    mode: str = EXHAUSTIVE
    count: int = 0
    seed: int | None = None
    strong_only: bool = False
    smd_only: bool = False
    density: float = 0.5
    dedup: bool = False
    max_exhaustive_n: int = 5

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.mode == EXHAUSTIVE:
            if self.n > self.max_exhaustive_n:
                raise SizeGuardError(
                    f"exhaustive enumeration of n={self.n} exceeds guard n<={self.max_exhaustive_n} "
                    f"({self.size} labeled digraphs); use random mode with an explicit seed"
                )
        elif self.mode == RANDOM:
            if self.seed is None:
                raise ValueError("random mode requires an explicit seed")
            if self.count < 0:
                raise ValueError("count must be non-negative")
            if not 0.0 <= self.density <= 1.0:
                raise ValueError("density must lie in [0, 1]")
            if self.dedup:
                raise ValueError("dedup is only supported in exhaustive mode")
            if self.n > 16:
                raise SizeGuardError("random populations support n <= 16")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def pairs(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def size(self) -> int:
        return 4**self.pairs if self.mode == EXHAUSTIVE else self.count

    def to_json(self) -> dict:
        return asdict(self)


def _random_rows(rng: np.random.Generator, k: int, n: int, density: float) -> np.ndarray:
    present = rng.random((k, n, n)) < density
    present[:, np.arange(n), np.arange(n)] = False
    weights = (1 << np.arange(n, dtype=np.int64))
    return (present.astype(np.int64) * weights).sum(axis=2)


def _batches(spec: PopulationSpec, start: int = 0, chunk: int = CHUNK) -> Iterator[tuple[int, int, np.ndarray]]:
    n = spec.n
    if spec.mode == EXHAUSTIVE:
        total = spec.size
        for lo in range(start, total, chunk):
            hi = min(total, lo + chunk)
            yield lo, hi, batch.codes_to_rows(np.arange(lo, hi, dtype=np.int64), n)
    else:
        if start:
            raise CheckpointError("random populations cannot resume mid-stream")
        rng = np.random.default_rng(spec.seed)
        for lo in range(0, spec.count, CHUNK):
            hi = min(spec.count, lo + CHUNK)
            yield lo, hi, _random_rows(rng, hi - lo, n, spec.density)


def _filter_mask(spec: PopulationSpec, lo: int, rows: np.ndarray, flags: dict) -> np.ndarray:
    mask = np.ones(len(rows), dtype=bool)
    if spec.strong_only:
        mask &= flags["strong"]
    if spec.smd_only:
        mask &= flags["smd"]
    if spec.dedup:
        own = np.arange(lo, lo + len(rows), dtype=np.int64)
        mask &= batch.canonical_codes(rows, spec.n) == own
    return mask


def enumerate_digraphs(spec: PopulationSpec) -> Iterator[Digraph]:
    """Every digraph of the population that passes the filters, in index order."""
    spec.validate()
    for lo, _, rows in _batches(spec):
        flags = batch.evaluate(rows, spec.n, ())
        for r in rows[_filter_mask(spec, lo, rows, flags)]:
            yield Digraph(spec.n, r.tolist())


# --- implication sweeps ------------------------------------------------------


@dataclass
class Tally:
    examined: int = 0
    strong: int = 0
    satisfying: int = 0
    supereulerian: int = 0
    counterexamples: list[int] = field(default_factory=list)

    def merge(self, other: "Tally") -> "Tally":
        return Tally(
            self.examined + other.examined,
            self.strong + other.strong,
            self.satisfying + other.satisfying,
            self.supereulerian + other.supereulerian,
            sorted(self.counterexamples + other.counterexamples),
        )


@dataclass
class VerificationReport:
    hypothesis: Hypothesis
    population: PopulationSpec
    generated: int
    tally: Tally
    complete: bool = True
    next_index: int = 0
    seconds: float = 0.0

    @property
    def counterexamples(self) -> list[Digraph]:
        return [Digraph.from_code(self.population.n, c) for c in self.tally.counterexamples]

    def to_json(self, timing: bool = False) -> dict:
        t = self.tally
        out = {
            "hypothesis": self.hypothesis.value,
            "proved": self.hypothesis.proved,
            "population": self.population.to_json(),
            "counts": {
                "generated": self.generated,
                "examined": t.examined,
                "strong": t.strong,
                "satisfying": t.satisfying,
                "supereulerian": t.supereulerian,
                "counterexamples": len(t.counterexamples),
            },
            "counterexamples": [
                {"code": c, "edge_list": format_edge_list(D)}
                for c, D in zip(t.counterexamples, self.counterexamples)
            ],
            "complete": self.complete,
            "next_index": self.next_index,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def dumps_report(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def sweep_digest(spec: PopulationSpec, hypotheses: Iterable[Hypothesis]) -> str:
    payload = {"population": spec.to_json(), "hypotheses": sorted(h.value for h in hypotheses)}
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode("ascii")).hexdigest()


def _to_base4(value: int, digits: int) -> str:
    out = []
    for _ in range(digits):
        out.append(str(value & 3))
        value >>= 2
    return "".join(reversed(out))


def write_checkpoint(path, digest: str, spec: PopulationSpec, index: int, tallies: dict) -> None:
    """Three ASCII lines: sweep digest, base-4 counter (most significant first), tallies."""
    state = {h.value: asdict(t) for h, t in tallies.items()}
    text = (
        f"sweep {digest}\n"
        f"counter {_to_base4(index, spec.pairs + 1)}\n"
        f"tallies {json.dumps(state, sort_keys=True, separators=(',', ':'))}\n"
    )
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(text, encoding="ascii", newline="\n")
    tmp.replace(path)


def read_checkpoint(path, digest: str, spec: PopulationSpec, hypotheses) -> tuple[int, dict]:
    try:
        lines = Path(path).read_text(encoding="ascii").split("\n")
    except (OSError, UnicodeDecodeError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    if len(lines) != 4 or lines[3] != "":
        raise CheckpointError("checkpoint must have exactly three lines")
    head, counter, state = lines[:3]
    if not head.startswith("sweep ") or not counter.startswith("counter ") or not state.startswith("tallies "):
        raise CheckpointError("malformed checkpoint line prefixes")
    if head[6:] != digest:
        raise CheckpointError("checkpoint belongs to a different sweep (spec hash mismatch)")
    digits = counter[8:]
    if len(digits) != spec.pairs + 1 or any(c not in "0123" for c in digits):
        raise CheckpointError("counter is not a base-4 numeral of the expected width")
    index = int(digits, 4)
    if index > spec.size:
        raise CheckpointError("counter beyond the end of the population")
    try:
        raw = json.loads(state[8:])
        tallies = {h: Tally(**raw[h.value]) for h in hypotheses}
    except (ValueError, KeyError, TypeError) as exc:
        raise CheckpointError(f"corrupt tallies: {exc}") from exc
    if set(raw) != {h.value for h in hypotheses}:
        raise CheckpointError("tallies do not match the sweep's hypotheses")
    return index, tallies


def verify_many(
    spec: PopulationSpec,
    hypotheses: Iterable[Hypothesis | str],
    guard: Guard = DEFAULT_GUARD,
    checkpoint=None,
    resume: bool = False,
    stop_after: int | None = None,
    chunk: int = CHUNK,
) -> list[VerificationReport]:
    """Sweep ``spec`` once, deciding every digraph that satisfies any hypothesis.

    Returns one report per hypothesis.  With ``checkpoint`` the position and
    tallies are saved after every chunk; ``resume`` continues from that file.
    ``stop_after`` halts (incomplete) once that population index is passed.
    """
    hyps = [Hypothesis.parse(h) for h in hypotheses]
    if not hyps:
        raise ValueError("no hypotheses given")
    spec.validate()
    digest = sweep_digest(spec, hyps)
    t0 = time.perf_counter()
    start = 0
    tallies = {h: Tally() for h in hyps}
    if resume:
        if checkpoint is None:
            raise CheckpointError("resume requested without a checkpoint path")
        start, tallies = read_checkpoint(checkpoint, digest, spec, hyps)
    n = spec.n
    position = start
    complete = True
    for lo, hi, rows in _batches(spec, start, chunk):
        flags = batch.evaluate(rows, n, hyps)
        mask = _filter_mask(spec, lo, rows, flags)
        needed = np.zeros(len(rows), dtype=bool)
        sats = {}
        for h in hyps:
            sats[h] = flags[h] & mask
            needed |= sats[h]
        good = np.zeros(len(rows), dtype=bool)
        for i in np.flatnonzero(needed).tolist():
            d = decide(Digraph(n, rows[i].tolist()), guard)
            if d.verdict == NOT_STRONG:
                raise RuntimeError("batch strongness disagrees with decide")
            good[i] = d.supereulerian
        codes = None
        for h in hyps:
            t = tallies[h]
            t.examined += int(mask.sum())
            t.strong += int((flags["strong"] & mask).sum())
            t.satisfying += int(sats[h].sum())
            t.supereulerian += int((sats[h] & good).sum())
            bad = np.flatnonzero(sats[h] & ~good)
            if len(bad):
                if spec.mode == EXHAUSTIVE:
                    t.counterexamples.extend(lo + int(i) for i in bad)
                else:
                    if codes is None:
                        codes = [Digraph(n, r.tolist()).code for r in rows]
                    t.counterexamples.extend(codes[i] for i in bad)
        position = hi
        if checkpoint is not None and spec.mode == EXHAUSTIVE:
            write_checkpoint(checkpoint, digest, spec, position, tallies)
        if stop_after is not None and position >= stop_after and position < spec.size:
            complete = False
            break
    elapsed = time.perf_counter() - t0
    reports = []
    for h in hyps:
        tallies[h].counterexamples.sort()
        report = VerificationReport(h, spec, position, tallies[h], complete, position, elapsed)
        for D in report.counterexamples:
            if not reverify(D, h):
                raise RuntimeError(f"counterexample {D.code} failed independent re-verification")
        reports.append(report)
    return reports


def verify_implication(spec: PopulationSpec, h: Hypothesis | str, **kwargs) -> VerificationReport:
    """Check "strong + hypothesis => supereulerian" across a population."""
    return verify_many(spec, [h], **kwargs)[0]


def reverify(D: Digraph | str, h: Hypothesis | str, guard: Guard = DEFAULT_GUARD) -> bool:
    """Scalar re-check that ``D`` satisfies ``h`` yet is not supereulerian."""
    if isinstance(D, str):
        D = parse_edge_list(D)
    return bool(hypothesis_holds(D, h)) and not decide(D, guard).supereulerian


def write_counterexamples(report: VerificationReport, directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for code, D in zip(report.tally.counterexamples, report.counterexamples):
        path = directory / f"counterexample_{report.hypothesis.value}_n{D.n}_{code}.txt"
        comments = [f"satisfies {report.hypothesis.value} but is not supereulerian", f"code {code}"]
        path.write_text(format_edge_list(D, comments), encoding="ascii", newline="\n")
        paths.append(path)
    return paths


# --- randomised lemma trials ---------------------------------------------------


def random_digraph(rng: random.Random, n: int, density: float) -> Digraph:
    return Digraph.from_arcs(n, [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density])


def random_ditrail(D: Digraph, rng: random.Random, avoid: Iterable[tuple[int, int]] = ()) -> Ditrail:
    """Random arc-distinct walk, possibly of length 0, avoiding ``avoid``."""
    used = set(avoid)
    cur = rng.randrange(D.n)
    walk = [cur]
    target = rng.randint(0, 2 * D.n)
    while len(walk) - 1 < target:
        options = [b for b in D.out_neighbors(cur) if (cur, b) not in used]
        if not options:
            break
        nxt = rng.choice(options)
        used.add((cur, nxt))
        walk.append(nxt)
        cur = nxt
    return Ditrail(D, tuple(walk))


def _instance_json(D: Digraph, **parts) -> dict:
    return {"edge_list": format_edge_list(D), **{k: str(v) for k, v in parts.items()}}


def lemma_trials(trials: int, seed: int, max_n: int = 6, smd_max_n: int = 4) -> dict:
    """Randomised checks of the two trail lemmas plus an exhaustive multipartite sweep."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    rng = random.Random(seed)
    densities = (0.25, 0.4, 0.6)

    st = {"trials": 0, "premise_true": 0, "violations": 0, "violating_instances": []}
    for _ in range(trials):
        D = random_digraph(rng, rng.randint(2, max_n), rng.choice(densities))
        S = random_ditrail(D, rng)
        T = random_ditrail(D, rng, avoid=S.arcs)
        res = check_lemma_notST(D, S, T)
        st["trials"] += 1
        st["premise_true"] += bool(res.premise)
        if not res.holds:
            st["violations"] += 1
            st["violating_instances"].append(_instance_json(D, S=S, T=T))

    sx = {"trials": 0, "premise_true": 0, "violations": 0, "violating_instances": []}
    for _ in range(trials):
        D = random_digraph(rng, rng.randint(2, max_n), rng.choice(densities))
        S = random_ditrail(D, rng)
        x = rng.randrange(D.n)
        res = check_corollary_notSx(D, S, x)
        sx["trials"] += 1
        sx["premise_true"] += bool(res.premise)
        if not res.holds:
            sx["violations"] += 1
            sx["violating_instances"].append(_instance_json(D, S=S, x=x))

    smd = {"max_n": smd_max_n, "checked": 0, "violations": 0, "violating_instances": []}
    for n in range(1, smd_max_n + 1):
        for code in range(4 ** (n * (n - 1) // 2)):
            D = Digraph.from_code(n, code)
            if not recognize_semicomplete_multipartite(D):
                continue
            res = check_smd_lemma(D)
            smd["checked"] += 1
            if not res.holds:
                smd["violations"] += 1
                smd["violating_instances"].append(_instance_json(D, triple=res.witness))

    return {
        "seed": seed,
        "max_n": max_n,
        "lemma_notST": st,
        "corollary_notSx": sx,
        "smd_lemma": smd,
        "violations": st["violations"] + sx["violations"] + smd["violations"],
    }
