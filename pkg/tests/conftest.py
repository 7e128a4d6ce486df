from fractions import Fraction as F

from rnspace import RnParams, parse_literal

P1 = RnParams(1)
P2 = RnParams(2)


def lit(text, n=1):
    return parse_literal(text, RnParams(n))


__all__ = ["F", "P1", "P2", "lit"]


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
