"""Acceptance gate: one exact check per criterion, summarized as PASS/FAIL lines.

Run ``pytest tests/test_acceptance.py`` (lines appear in the terminal summary)
or ``python3 tests/test_acceptance.py``.
"""

import subprocess
import sys

import pytest

from awdaha.coeff import parse_params
from awdaha.ncalg import ALGEBRAS
from awdaha.verify import VerifyConfig, run_suite

PARAMS = "1/2,2,3,5,7"
N, SEED, TRIALS = 12, 0, 5
CFG = VerifyConfig(N=N, family_max=10, word_length=5)

# criterion -> (title, suites, check names the main pack must produce)
CRITERIA = {
    1: ("AW(3) cubic relations for (Dsym, Zsym)", ["aw3_relations"],
        ["cubic.K1", "cubic.K0"]),
    2: ("Casimir acts as Q0", ["aw3_casimir"], ["Q=Q0"]),
    3: ("DAHA relations, Y and D closed forms", ["daha_relations", "daha_pbw"],
        ["T1 quadratic", "T0 quadratic", "T1Z quadratic", "T0Zi quadratic",
         "T1.Z", "T1.Zi", "T1.Y", "T1.Yi", "Y.Z", "Y.Zi", "Yi.Z", "Yi.Zi",
         "Y closed form", "D closed form"]),
    4: ("eigenstructure of P, Q, Pdag, Qdag", ["eigen_families"],
        ["lambda distinct", "P_10 modes agree", "D P_10", "T1 Q_10", "T0 Pdag_10",
         "T0 Qdag_10"]),
    5: ("non-symmetric E_n", ["nonsym_eigen"],
        ["E_10 modes agree", "Y E_-10", "Y E_10", "T1 E_-10", "T1 E_10",
         "E_10 extreme terms"]),
    6: ("q-difference equation", ["qdiff_equation"],
        [f"qdiff n={n} (recurrence)" for n in range(1, 11)]),
    7: ("normal-form soundness, words of length <= 5", ["normalform_consistency"],
        sorted(ALGEBRAS)),
    8: ("finite faithfulness ranks", ["independence_aw3", "independence_daha"], ["rank"]),
    9: ("AWQ embeds into the DAHA", ["embedding"],
        ["T1.K0 reduces", "cubic.K1 reduces", "cubic.K0 reduces", "casimir reduces",
         "casimir operator"]),
    10: ("q-ultraspherical specialization", ["ultraspherical"],
         ["E=F0=F1=0", "cubic.K1 for (D, Zsym)", "cubic.K0 for (D, Zsym)", "Q~ - Q"]),
}

RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="module")
def pack():
    return parse_params(PARAMS, depth=max(N + 4, CFG.family_max + 1))


def _judge(k: int, pack) -> tuple[bool, str]:
    title, suites, required = CRITERIA[k]
    reports = [run_suite(s, pack, N, SEED, TRIALS, CFG) for s in suites]
    checks = [c for r in reports for c in r.checks]
    names = {c.name for c in checks}
    missing = [n for n in required if not any(x == f"main/{n}" for x in names)]
    labels = {c.name.split("/", 1)[0] for c in checks}
    want_labels = {"main"} | {f"trial{i}" for i in range(1, TRIALS + 1)}
    bad = [c.name for c in checks if c.status != "pass"]
    ok = not bad and not missing and want_labels <= labels
    summary = f"{len(checks) - len(bad)}/{len(checks)} checks over {len(labels)} packs"
    if missing:
        summary += f"; missing {missing}"
    if bad:
        summary += f"; failed {bad[:3]}"
    return ok, f"{title}: {summary}"


def _record(k: int, ok: bool, text: str):
    RESULTS[k] = (ok, text)
    print(f"{'PASS' if ok else 'FAIL'} criterion {k}: {text}")
    assert ok, text


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, pack):
    _record(k, *_judge(k, pack))


def _cli_report() -> bytes:
    cmd = [sys.executable, "-m", "awdaha", "verify", "--params", PARAMS, "--seed", "3",
           "--trials", "2", "--suite", "aw3_casimir", "--suite", "daha_pbw",
           "--suite", "nonsym_eigen", "--suite", "independence_daha"]
    return subprocess.run(cmd, capture_output=True, check=True).stdout


def test_criterion_11_determinism():
    first, second = _cli_report(), _cli_report()
    ok = first == second and len(first.splitlines()) == 4
    _record(11, ok, f"two verify runs, {len(first)} bytes each, identical={first == second}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
