from collections import Counter
from itertools import combinations

import pytest

from app.repositories.patterns_repository import K5_MINUS_P4, K5_MINUS_Y4
from app.schemas.verdicts import EnumerationBudget
from app.services.oracle_service import (
    crosscheck,
    enumerate_graphic_sequences,
    enumerate_realizations,
    enumerate_sequences,
    fan_out,
    oracle_potentially,
)
from app.utils.exception_handlers import (
    BudgetExhaustedError,
    NotGraphicError,
    OracleCeilingError,
    OutOfScopeError,
)
from app.utils.settings import get_settings
from tests.conftest import powers, seq


def _naive_realization_counts(n: int) -> Counter:
    """Labeled graphs on n vertices keyed by their per-vertex degree tuple."""
    pairs = list(combinations(range(n), 2))
    counts: Counter = Counter()
    for mask in range(1 << len(pairs)):
        degrees = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                degrees[u] += 1
                degrees[v] += 1
        counts[tuple(degrees)] += 1
    return counts


def test_enumerate_realizations_small_cases():
    assert [g.edges for g in enumerate_realizations(seq(2, 2, 2))] == [((0, 1), (0, 2), (1, 2))]
    assert len(list(enumerate_realizations(seq(1, 1)))) == 1
    assert len(list(enumerate_realizations(powers((2, 4))))) == 3


def test_enumerate_realizations_rejects_non_graphic():
    with pytest.raises(NotGraphicError):
        list(enumerate_realizations(seq(3, 3, 3, 1)))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_enumeration_is_complete_and_duplicate_free(n):
    naive = _naive_realization_counts(n)
    for sequence in enumerate_graphic_sequences(n):
        graphs = list(enumerate_realizations(sequence))
        assert len({g.edges for g in graphs}) == len(graphs)
        assert all(g.degrees == sequence.terms for g in graphs)
        assert len(graphs) == naive[sequence.terms], sequence


def test_oracle_known_sequences():
    assert oracle_potentially(powers((4, 5)), K5_MINUS_P4)
    assert not oracle_potentially(powers((3, 6)), K5_MINUS_Y4)
    assert not oracle_potentially(seq(4, 4, 2, 2, 2), K5_MINUS_P4)


def test_budget_exhaustion_is_never_a_no():
    with pytest.raises(BudgetExhaustedError) as excinfo:
        oracle_potentially(powers((3, 6)), K5_MINUS_Y4, EnumerationBudget(max_nodes=1))
    assert excinfo.value.nodes == 1

    report = crosscheck(K5_MINUS_P4, 5, budget=EnumerationBudget(max_nodes=1))
    assert report.unknown > 0
    assert report.ok
    assert report.yes + report.no + report.unknown == report.tested == 20


def test_budget_defaults_to_settings(monkeypatch):
    monkeypatch.setenv("POTGRAPH_MAX_NODES", "1")
    get_settings.cache_clear()
    with pytest.raises(BudgetExhaustedError):
        oracle_potentially(powers((3, 6)), K5_MINUS_Y4)


def test_enumerate_sequences_order():
    assert [s.terms for s in enumerate_sequences(2, 2)] == [(2, 2), (2, 1), (1, 1)]
    assert list(enumerate_sequences(0, 3)) == []


@pytest.mark.parametrize("n, count", [(2, 1), (3, 2), (4, 7), (5, 20)])
def test_graphic_sequence_counts(n, count):
    assert len(list(enumerate_graphic_sequences(n))) == count


def test_graphic_sequences_are_lexicographically_descending():
    assert [s.terms for s in enumerate_graphic_sequences(3)] == [(2, 2, 2), (2, 1, 1)]
    found = [s.terms for s in enumerate_graphic_sequences(6)]
    assert found == sorted(found, reverse=True)


def test_oracle_ceiling(monkeypatch):
    with pytest.raises(OracleCeilingError):
        list(enumerate_graphic_sequences(11))
    with pytest.raises(OracleCeilingError):
        crosscheck(K5_MINUS_P4, 30)

    monkeypatch.setenv("POTGRAPH_ORACLE_CEILING", "6")
    get_settings.cache_clear()
    with pytest.raises(OracleCeilingError) as excinfo:
        crosscheck(K5_MINUS_Y4, 7)
    assert excinfo.value.details == {"n": 7, "ceiling": 6}


def test_crosscheck_needs_five_terms():
    with pytest.raises(OutOfScopeError):
        crosscheck(K5_MINUS_P4, 4)


def test_fan_out_keeps_input_order():
    assert list(fan_out(abs, [-3, 1, -2], workers=2)) == [3, 1, 2]
    assert list(fan_out(abs, [-3, 1, -2], workers=1)) == [3, 1, 2]


def test_crosscheck_across_processes_matches_serial():
    serial = crosscheck("k5-y4", 5, workers=1)
    parallel = crosscheck("k5-y4", 5, workers=2)
    assert serial == parallel
    assert serial.tested == 20
