import random

import pytest

from helpers import DATA, write_tone_corpus


@pytest.fixture
def fixture_corpus():
    return DATA / "corpus"


@pytest.fixture
def fixture_refs():
    return DATA / "refs"


@pytest.fixture
def tone_corpus(tmp_path):
    return write_tone_corpus(tmp_path / "tone")


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_c" not in nodeid or rep.when not in ("call", "setup"):
                continue
            if outcome == "passed" and rep.when != "call":
                continue
            name = nodeid.split("::")[-1]
            lines.append((name, {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[outcome]))
    if not lines:
        return
    import test_acceptance

    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(lines):
        doc = (getattr(test_acceptance, name).__doc__ or name).strip().splitlines()[0]
        terminalreporter.write_line(f"{verdict:4}  {doc}")
