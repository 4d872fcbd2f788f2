import pytest

from spohn import ProbDist, RankingFunction, WorldSpace

SECTION1_MASSES = ("0.5185", "0.2308", "0.1538", "0.0969")

_acceptance_lines: list[str] = []


def record_criterion(line: str) -> None:
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def space4():
    return WorldSpace.of_size(4)


@pytest.fixture
def p_intro(space4):
    """The four-world distribution used for the eps-rule counterexample."""
    return ProbDist.of(SECTION1_MASSES, space4)


@pytest.fixture
def delta_example(space4):
    """Ranks (0, 1, 1, 2), strata (1, 2, 1)."""
    return RankingFunction(space4, (0, 1, 1, 2))
