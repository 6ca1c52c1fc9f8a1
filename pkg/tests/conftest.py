import pytest

_ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}
_SKIPPED: dict[int, str] = {}


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
            params = getattr(item, "callspec", None)
            if params is not None and "crit" in params.params:
                _SKIPPED[params.params["crit"]] = params.params["label"]


@pytest.fixture
def acceptance():
    """Record ``(criterion, label, ok, detail)`` lines for the terminal summary."""

    def record(criterion: int, label: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.setdefault(criterion, []).append((label, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(set(_ACCEPTANCE) | set(_SKIPPED)):
        if crit not in _ACCEPTANCE:
            terminalreporter.write_line(f"SKIP criterion {crit}: {_SKIPPED[crit]} not run; pass --slow")
            continue
        parts = _ACCEPTANCE[crit]
        ok = all(p[1] for p in parts)
        checks = "; ".join(f"{label}={'ok' if good else 'FAIL'}" for label, good, _ in parts)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {crit}: {checks}")
        for label, good, detail in parts:
            if not good and detail:
                terminalreporter.write_line(f"    {label}: {detail}")
