import pytest

from perrin_repdigits.sequences import SequenceCache


@pytest.fixture(scope="session")
def cache():
    c = SequenceCache()
    c.extend_to(2000)
    return c


@pytest.fixture(scope="session")
def fidelity_cert():
    from perrin_repdigits.pipeline import run_pipeline

    return run_pipeline(256, "fidelity")


@pytest.fixture(scope="session")
def audit_cert():
    from perrin_repdigits.pipeline import run_pipeline

    return run_pipeline(256, "audit")


_verdicts = pytest.StashKey[list]()


@pytest.fixture
def verdict(request):
    """Record one acceptance line, then assert it."""
    lines = request.config.stash.setdefault(_verdicts, [])

    def record(number, title, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} -- {detail}"
        lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_verdicts, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
