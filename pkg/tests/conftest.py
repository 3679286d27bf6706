import pytest

# criterion number -> (passed, summary); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}")


@pytest.fixture
def record():
    def _record(n, ok, text):
        prev = ACCEPTANCE.get(n, (True, ""))
        ACCEPTANCE[n] = (prev[0] and ok, text if not prev[1] else f"{prev[1]}; {text}")
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}")
        return ok

    return _record
