import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from app.schemas.sequences import DegreeSequence
from app.services.graphicality_service import (
    graphicality_report,
    havel_hakimi_realize,
    is_graphic_erdos_gallai,
    is_graphic_lay_off,
    is_graphic_small_degree,
    lay_off,
)
from app.services.oracle_service import enumerate_sequences
from app.utils.exception_handlers import LayOffError, NotGraphicError
from tests.conftest import seq


@pytest.mark.parametrize(
    "sequence, residual, reduced",
    [
        (seq(3, 3, 2, 2, 2), (2, 2, 2, 2), {1, 2}),
        (seq(2, 1, 1), (1, 1), {1}),
        (seq(4, 4, 4, 4, 4), (3, 3, 3, 3), {1, 2, 3, 4}),
        (seq(1, 1), (), {1}),
    ],
)
def test_lay_off(sequence, residual, reduced):
    result = lay_off(sequence)
    assert result.residual.terms == residual
    assert result.reduced_positions == frozenset(reduced)
    assert result.laid_off == sequence.terms[-1]


def test_lay_off_impossible_is_a_no():
    with pytest.raises(LayOffError) as excinfo:
        lay_off(seq(2, 2))
    assert excinfo.value.exit_code == 1


@pytest.mark.parametrize(
    "sequence, expected",
    [
        (seq(3, 3, 3, 1), False),
        (seq(4, 1, 1, 1), False),
        (seq(3, 3, 2, 2, 2), True),
        (seq(2, 2, 2), True),
        (seq(3, 1, 1), False),
        (seq(6, 3, 2, 2, 2, 2, 1), True),
    ],
)
def test_graphic_deciders(sequence, expected):
    assert is_graphic_erdos_gallai(sequence) is expected
    assert is_graphic_lay_off(sequence) is expected


def test_small_degree_fast_path():
    assert is_graphic_small_degree(seq(2, 2, 1, 1)) is True
    assert is_graphic_small_degree(seq(1, 1, 1)) is None
    assert is_graphic_small_degree(seq(3, 2, 1)) is None
    assert is_graphic_small_degree(seq(2, 2, 2)) is None


def test_havel_hakimi_small_cases():
    assert havel_hakimi_realize(seq(2, 2, 2)).edges == ((0, 1), (0, 2), (1, 2))
    assert havel_hakimi_realize(seq(1, 1)).edges == ((0, 1),)
    graph = havel_hakimi_realize(seq(3, 3, 2, 2, 2))
    assert graph.vertex_count == 5
    assert graph.edge_count == 6
    assert graph.degrees == (3, 3, 2, 2, 2)


def test_havel_hakimi_refuses_non_graphic():
    with pytest.raises(NotGraphicError):
        havel_hakimi_realize(seq(3, 3, 3, 1))


@settings(max_examples=300)
@given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=10))
def test_deciders_agree_with_networkx(values):
    sequence = DegreeSequence.of(values)
    expected = nx.is_graphical(list(sequence.terms))
    report = graphicality_report(sequence)
    assert report.erdos_gallai is expected
    assert report.lay_off is expected
    if report.small_degree is not None:
        assert report.small_degree is expected
    if expected:
        assert havel_hakimi_realize(sequence).degrees == sequence.terms


@pytest.mark.slow
def test_deciders_agree_on_every_short_sequence():
    for n in range(1, 11):
        for sequence in enumerate_sequences(n, 9):
            eg = is_graphic_erdos_gallai(sequence)
            assert is_graphic_lay_off(sequence) is eg, sequence
            if is_graphic_small_degree(sequence):
                assert eg, sequence
            if eg:
                assert havel_hakimi_realize(sequence).degrees == sequence.terms, sequence
