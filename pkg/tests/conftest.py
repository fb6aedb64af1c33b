import pytest

from app.schemas.sequences import DegreeSequence
from app.utils.settings import get_settings

_ENV_VARS = (
    "POTGRAPH_LOG_LEVEL",
    "POTGRAPH_ORACLE_CEILING",
    "POTGRAPH_MAX_WORKERS",
    "POTGRAPH_MAX_NODES",
    "POTGRAPH_MAX_TERMS",
)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for name in _ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def seq(*terms: int) -> DegreeSequence:
    return DegreeSequence.of(terms)


def powers(*groups: tuple[int, int]) -> DegreeSequence:
    """Build r^t notation directly: powers((4, 2), (2, 3)) is (4^2, 2^3)."""
    terms: list[int] = []
    for value, repeat in groups:
        terms.extend([value] * repeat)
    return DegreeSequence.of(terms)
