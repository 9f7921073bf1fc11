import pytest

_ACCEPTANCE: list[tuple[str, str, str]] = []


class Recorder:
    def __call__(self, criterion: str, ok: bool | None, detail: str = "") -> None:
        status = {True: "PASS", False: "FAIL", None: "SKIP"}[ok]
        _ACCEPTANCE.append((criterion, status, detail))


@pytest.fixture
def record():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, status, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {criterion}  {detail}")
