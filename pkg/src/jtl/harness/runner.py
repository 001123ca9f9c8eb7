"""Run suites over a catalog and collect reports in canonical order."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from ..errors import BudgetExceeded
from .catalog import Catalog, load_catalog
from .suites import SUITES


@dataclass
class SuiteReport:
    suite_id: str
    ring: str
    instance: str
    status: str
    witness: Optional[dict] = None
    note: Optional[str] = None
    elapsed: float = 0.0          # milliseconds

    def sort_key(self):
        return (self.suite_id, self.ring, self.instance)

    def to_record(self, timings: bool = False) -> dict:
        rec = {"suite_id": self.suite_id, "ring": self.ring, "instance": self.instance,
               "status": self.status}
        if self.witness is not None:
            rec["witness"] = self.witness
        if self.note is not None:
            rec["note"] = self.note
        if timings:
            rec["elapsed"] = round(self.elapsed, 3)
        return rec


def suite_ids(selector: str) -> list[str]:
    if selector == "all":
        return list(SUITES)
    if selector not in SUITES:
        raise KeyError(f"unknown suite {selector!r}")
    return [selector]


def _run_one(suite_id: str, catalog: Catalog, ring_name: str) -> list[SuiteReport]:
    R = catalog.ring(ring_name)
    out = []
    instances = SUITES[suite_id].run(catalog, R)
    while True:
        start = time.perf_counter()
        try:
            label, check = next(instances)
        except StopIteration:
            break
        except BudgetExceeded as exc:
            # the generator itself ran out of budget; nothing further to enumerate
            out.append(SuiteReport(suite_id, R.name, "<enumeration>", "skipped",
                                   note=str(exc)))
            break
        try:
            v = check()
            status, witness, note = v.status, v.witness, v.note
        except BudgetExceeded as exc:
            status, witness, note = "skipped", None, f"budget: {exc}"
        except AssertionError as exc:
            status, witness, note = "fail", {"assertion": str(exc) or "internal invariant"}, \
                "internal assertion"
        out.append(SuiteReport(suite_id, R.name, label, status, witness, note,
                               (time.perf_counter() - start) * 1000))
    return out


_worker_catalog: Optional[Catalog] = None


def _init_worker(source):
    global _worker_catalog
    _worker_catalog = load_catalog(source)


def _worker_task(task):
    suite_id, ring_name = task
    return _run_one(suite_id, _worker_catalog, ring_name)


def run_suite(selector: str, catalog: Catalog, jobs: int = 1) -> list[SuiteReport]:
    """Run one suite (or "all") on every ring of the catalog.

    With ``jobs > 1`` the (suite, ring) tasks go to worker processes that
    each rebuild the catalog from ``catalog.source``; the merged reports are
    sorted, so the result does not depend on scheduling.
    """
    tasks = [(sid, R.name) for sid in suite_ids(selector) for R in catalog.rings]
    reports: list[SuiteReport] = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs, initializer=_init_worker,
                                 initargs=(catalog.source,)) as pool:
            for chunk in pool.map(_worker_task, tasks):
                reports.extend(chunk)
    else:
        for sid, name in tasks:
            reports.extend(_run_one(sid, catalog, name))
    reports.sort(key=SuiteReport.sort_key)
    return reports
