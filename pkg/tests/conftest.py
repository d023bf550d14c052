import pytest

from pvconn.graph import enumerate_connected_graphs


@pytest.fixture(scope="session")
def corpus():
    """All 141 connected graphs of orders 3-6."""
    return [g for n in range(3, 7) for g in enumerate_connected_graphs(n)]


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
