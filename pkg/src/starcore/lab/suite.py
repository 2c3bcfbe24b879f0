"""Run many seeded trials of the theorem checkers and aggregate verdicts."""

from __future__ import annotations

import hashlib
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .checkers import run_checker
from .generators import Instance, draw
from .report import EQUIVALENCES, TheoremId, TheoremReport, Verdict


@dataclass(frozen=True)
class SuiteConfig:
    theorems: tuple[TheoremId, ...]
    trials: int
    size: int = 5
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.size < 1:
            raise ValueError("size must be at least 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    def to_json_obj(self) -> dict:
        # jobs is deliberately absent: it must not change any output
        return {"theorems": [t.value for t in self.theorems], "trials": self.trials,
                "size": self.size, "seed": self.seed}


def resolve_theorems(selection: str | TheoremId) -> tuple[TheoremId, ...]:
    if isinstance(selection, TheoremId):
        return (selection,)
    if selection == "all":
        return tuple(TheoremId)
    return (TheoremId.parse(selection),)


def trial_rng(seed: int, theorem: TheoremId, trial: int) -> random.Random:
    """Independent stream per (seed, theorem, trial); string seeds hash with SHA-512."""
    return random.Random(f"{seed}:{theorem.value}:{trial}")


def instance_digest(inst: Instance) -> str:
    blob = json.dumps(inst.to_json_obj(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def run_trial(task: tuple[TheoremId, int, int, int]) -> dict:
    theorem, trial, seed, size = task
    inst, report = draw(theorem, trial_rng(seed, theorem, trial), size)
    record = {
        "theorem": theorem.value,
        "trial": trial,
        "instance_sha256": instance_digest(inst),
        "report": report.to_dict(),
    }
    if report.verdict is Verdict.VIOLATION:
        record["instance"] = inst.to_json_obj()
    return record


@dataclass
class TheoremTally:
    trials: int = 0
    EquivalenceHolds: int = 0
    HypothesisFailed: int = 0
    VIOLATION: int = 0
    side1_true: int = 0
    side2_true: int = 0

    def add(self, report: dict) -> None:
        self.trials += 1
        setattr(self, report["verdict"], getattr(self, report["verdict"]) + 1)
        if report["side1"] and all(c["holds"] for c in report["side1"]):
            self.side1_true += 1
        if report["side2"] and all(c["holds"] for c in report["side2"]):
            self.side2_true += 1


@dataclass
class SuiteResult:
    config: SuiteConfig
    tallies: dict[str, TheoremTally]
    records: list[dict]
    reproducer: str | None = None
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        out = {"config": self.config.to_json_obj(), "ok": self.ok, "theorems": {}}
        for name, tally in self.tallies.items():
            entry = asdict(tally)
            if TheoremId(name) not in EQUIVALENCES:
                del entry["side1_true"]
            out["theorems"][name] = entry
        out["violations"] = [{"theorem": v["theorem"], "trial": v["trial"],
                              "discrepancy": v["report"]["discrepancy"]} for v in self.violations]
        if self.reproducer:
            out["reproducer"] = self.reproducer
        return out

    def full_report(self) -> dict:
        out = self.summary()
        out["trials"] = [{k: v for k, v in r.items() if k != "instance"} for r in self.records]
        return out


def run_suite(theorem: str | TheoremId = "all", trials: int = 1, size: int = 5, seed: int = 0,
              jobs: int = 1, reproducer_dir: str | None = None) -> SuiteResult:
    """Generate ``trials`` hypothesis-satisfying instances per theorem and check each.

    Results are merged in (theorem, trial) order, so any ``jobs`` value gives
    identical output.  The first VIOLATION is written to a reproducer file
    when ``reproducer_dir`` is given.
    """
    config = SuiteConfig(resolve_theorems(theorem), trials, size, seed, jobs)
    tasks = [(t, k, seed, size) for t in config.theorems for k in range(trials)]
    if jobs == 1:
        records = [run_trial(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_trial, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    tallies = {t.value: TheoremTally() for t in config.theorems}
    violations = []
    for rec in records:
        tallies[rec["theorem"]].add(rec["report"])
        if rec["report"]["verdict"] == Verdict.VIOLATION.value:
            violations.append(rec)
    result = SuiteResult(config, tallies, records, violations=violations)
    if violations and reproducer_dir is not None:
        result.reproducer = write_reproducer(violations[0], seed, size, reproducer_dir)
    return result


def write_reproducer(record: dict, seed: int, size: int, directory: str) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"reproducer-{record['theorem']}-seed{seed}-trial{record['trial']}.json")
    bundle = {
        "theorem": record["theorem"],
        "seed": seed,
        "trial": record["trial"],
        "size": size,
        "instances": record["instance"]["matrices"],
        "lambda": record["instance"].get("lambda"),
        "family": record["instance"]["family"],
        "report": record["report"],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(bundle, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def replay(path: str) -> TheoremReport:
    """Re-run the checker on the instance stored in a reproducer bundle."""
    with open(path, encoding="utf-8") as fh:
        bundle = json.load(fh)
    inst = Instance.from_json_obj({"family": bundle.get("family", "reproducer"),
                                   "matrices": bundle["instances"], "lambda": bundle.get("lambda")})
    return run_checker(TheoremId.parse(bundle["theorem"]), inst.checker_args())
