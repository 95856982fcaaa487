import pytest

ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the line says FAIL unless the test body finishes."""
    state = {"detail": ""}

    def note(detail: str) -> None:
        state["detail"] = detail

    yield note
    name = request.node.name.removeprefix("test_")
    passed = not getattr(request.node, "failed_call", False)
    ACCEPTANCE.append(f"{'PASS' if passed else 'FAIL'} {name}: {state['detail']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and report.failed:
        item.failed_call = True


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
