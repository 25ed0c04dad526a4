from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

import pytest

_ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record (criterion, ok, detail); aggregated into one line per criterion."""
    def record(criterion, ok, detail):
        _ACCEPTANCE.setdefault(criterion, []).append((bool(ok), detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        rows = _ACCEPTANCE[crit]
        ok = all(r for r, _ in rows)
        detail = "; ".join(d for _, d in rows)
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'}: {detail}")
