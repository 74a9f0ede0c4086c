import pytest

from ringlab.corpus import DEFAULT_CORPUS
from ringlab.ringspec import parse_and_elaborate


@pytest.fixture(scope="session")
def corpus():
    """The default corpus, elaborated once per test session."""
    return {spec: parse_and_elaborate(spec) for spec in DEFAULT_CORPUS}


@pytest.fixture(scope="session")
def small_corpus():
    """A fast subset covering every construction kind."""
    specs = [
        "Z2", "Z4", "Z6", "Z9", "Z12",
        "Z2 x Z3", "M2(Z2)", "T2(Z2)", "T2(Z2)^upper",
        "Z3[C2]", "Z4[x]/x^2", "Z8/(4)", "corner(Z6, 3)",
    ]
    return {spec: parse_and_elaborate(spec) for spec in specs}
