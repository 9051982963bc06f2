"""Independent oracles shared by the test modules.

These evaluate the defining sums term by term, with no shared code path
through the library.
"""

from __future__ import annotations


def hom_sum(n: int, q: float, p: float) -> float:
    return sum(p ** (n - 1 - r) * q**r for r in range(n))


def F_m0_literal(m: int, q: float, p: float) -> float:
    return (
        sum(p ** (m - r) * q**r for r in range(m + 1))
        + sum(p ** (m - 1 - s) * q**s for s in range(m))
        - 1.0
    )


def F_adj_literal(m: int, q: float, p: float) -> float:
    return sum(p ** (m + 1 - r) * q**r for r in range(m + 2)) - sum(
        p ** (m - 1 - s) * q**s for s in range(m)
    )


def F_general_literal(lo: int, hi: int, q: float, p: float) -> float:
    return hom_sum(hi + 1, q, p) + hom_sum(hi, q, p) - hom_sum(lo + 1, q, p) - hom_sum(lo, q, p)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
