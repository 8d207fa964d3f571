import pytest

_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_CRITERIA] = {}


@pytest.fixture
def criterion(request):
    """record(label, passed, detail): collect per-criterion outcomes for the summary."""
    store = request.config.stash[_CRITERIA]

    def record(label: str, passed: bool, detail: str) -> bool:
        store.setdefault(label, []).append((bool(passed), detail))
        return bool(passed)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(_CRITERIA, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(store, key=lambda s: int(s[1:])):
        parts = store[label]
        ok = all(p for p, _ in parts)
        detail = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"{label:<4} {'PASS' if ok else 'FAIL'}  {detail}")
