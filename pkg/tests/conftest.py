import pytest

# criterion number -> (passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def record(criterion: int, passed: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, []).append((passed, detail))


@pytest.fixture
def acceptance_record():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        results = ACCEPTANCE[crit]
        ok = all(p for p, _ in results)
        failed = [d for p, d in results if not p]
        if len(results) == 1:
            detail = results[0][1]
        elif ok:
            detail = f"{len(results)}/{len(results)} checks passed"
        else:
            detail = f"{len(results) - len(failed)}/{len(results)} checks passed; failing: " + "; ".join(failed)
        tr.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'} - {detail}")
