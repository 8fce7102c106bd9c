from __future__ import annotations

from pathlib import Path

import pytest

from lefschetz_lab.gradedalg import GradedQuotient, SystemInput
from lefschetz_lab.polycore import QQ, Field, PolyRing, gradient, parse_poly

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def system(exprs, names=("x", "y", "z"), field=QQ) -> SystemInput:
    ring = PolyRing(tuple(names), field)
    return SystemInput(tuple(parse_poly(e, ring) for e in exprs), ring)


def gradient_system(expr, names=("x", "y", "z"), field=QQ) -> SystemInput:
    ring = PolyRing(tuple(names), field)
    return SystemInput(gradient(parse_poly(expr, ring)), ring)


def quotient(exprs, **kw) -> GradedQuotient:
    return GradedQuotient(system(exprs, **kw))


MONOMIAL = ("x^2", "y^2", "z^2")
HESSE_2 = "x^3 + y^3 + z^3 - 6*x*y*z"
HESSE_M2 = "x^3 + y^3 + z^3 + 6*x*y*z"
FERMAT = "x^3 + y^3 + z^3"
HESSE_SYSTEM = ("x^2 - 2*y*z", "y^2 - 2*x*z", "z^2 - 2*x*y")

FIXTURE_SYSTEMS = [
    MONOMIAL,
    HESSE_SYSTEM,
    ("x^2", "y^2", "z^3"),
    ("x^3", "y^3", "z^3"),
    ("x^2 + y^2", "y^2 + z^2", "x*y + z^2"),
    ("x^2 + y*z", "y^3 + x*z^2", "z^2 - x*y"),
]
FIXTURE_GRADIENTS = [
    "x^3 + y^3 + z^3",
    "x^3 + y^3 + z^3 - 6*x*y*z",
    "x^3 + y^3 + z^3 + 6*x*y*z",
    "x^4 + y^4 + z^4",
]


def certified_fixtures():
    out = [quotient(s) for s in FIXTURE_SYSTEMS]
    out += [GradedQuotient(gradient_system(f)) for f in FIXTURE_GRADIENTS]
    out.append(quotient(("x^2", "y^2", "z^2", "w^2"), names=("x", "y", "z", "w")))
    out.append(quotient(("x^2 + y*w", "y^2 + 2*z*x", "z^2 - 3*x*w", "w^2 + 5*x*y"), names=("x", "y", "z", "w")))
    assert all(q.is_ci for q in out)
    return out


@pytest.fixture
def xyz():
    return PolyRing(("x", "y", "z"))


@pytest.fixture
def uvw():
    return PolyRing(("x", "y", "z")).dual()


@pytest.fixture
def fp():
    return Field(65537)


@pytest.fixture(scope="session")
def monomial_q():
    return quotient(MONOMIAL)


@pytest.fixture(scope="session")
def hesse_q():
    return GradedQuotient(gradient_system(HESSE_2))


@pytest.fixture(scope="session")
def hesse_minus_q():
    return GradedQuotient(gradient_system(HESSE_M2))


@pytest.fixture(scope="session")
def fermat_q():
    return GradedQuotient(gradient_system(FERMAT))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
