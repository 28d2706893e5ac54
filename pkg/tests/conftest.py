from __future__ import annotations

import pytest

from twoended.finite_group import conjugation, inversion_map, named_group

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def s3():
    return named_group("S3")


@pytest.fixture
def c2():
    return named_group("cyclic", 2)


@pytest.fixture
def c3():
    return named_group("cyclic", 3)


@pytest.fixture
def v4():
    c2 = named_group("cyclic", 2)
    return named_group("product", c2, c2)


__all__ = ["record", "conjugation", "inversion_map"]
