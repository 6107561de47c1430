"""Acceptance criteria 1-12.  Each test prints one PASS/FAIL line; the lines
are repeated in the pytest summary.  Run directly for the lines alone:
``python3 tests/test_acceptance.py``."""
import os
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(__file__))
from conftest import ACCEPTANCE  # noqa: E402
from stackfill import verify  # noqa: E402

WORKERS = os.cpu_count() or 1

# criterion -> (title, suites, runtime bound in seconds or None)
CRITERIA = {
    1: ("worked examples replay exactly", ["figures"], 1.0),
    2: ("growth diagram and insertion agree on all words", ["words"], 10.0),
    3: ("lis/lds equal the shape of P", ["words"], 10.0),
    4: ("round trips", ["roundtrips"], 60.0),
    5: ("count tables independent of stack row order; f statistic-preserving bijection", ["theorem1"], None),
    6: ("(ne, se) symmetric on every stack shape", ["corollary1"], None),
    7: ("arbitrary row moves change ne", ["counterexamples"], 1.0),
    8: ("fixed row sums break the symmetry", ["rowsums"], 30.0),
    9: ("conjecture evidence: equal polynomials, asymmetric almost-moons", ["conjecture"], None),
    10: ("linked partition witnesses", ["witnesses"], 5.0),
    11: ("both linked partition bijections swap crossings and nestings", ["theorem5"], 60.0),
    12: ("K-Knuth property suite", ["kknuth"], None),
}


@lru_cache(maxsize=None)
def suite_report(name):
    report = verify.Report(f"verify --suite {name}")
    return verify.run([name], report, workers=WORKERS, shards=WORKERS)


def evaluate(k):
    title, suites, bound = CRITERIA[k]
    checks = []
    for name in suites:
        report = suite_report(name)
        checks += [c for c in report.checks if c.criterion == k]
    seconds = sum(c.seconds for c in checks)
    failed = [c for c in checks if c.required and not c.passed]
    slow = bound is not None and seconds > bound
    ok = bool(checks) and not failed and not slow
    why = "; ".join(f"{c.name}: {c.detail}" for c in failed)
    if slow:
        why = (why + "; " if why else "") + f"took {seconds:.1f}s > {bound}s"
    line = f"criterion {k:>2} {'PASS' if ok else 'FAIL'}  {title} ({seconds:.1f}s)" + (f"  [{why}]" if why else "")
    return ok, line, checks


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, line, checks = evaluate(k)
    ACCEPTANCE[k] = line
    print(line)
    for c in checks:
        print("   ", ("PASS" if c.passed else "FAIL" if c.required else "NOTE"), c.name, "-", c.detail)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(k) for k in sorted(CRITERIA)]
    for _, line, _ in results:
        print(line)
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
