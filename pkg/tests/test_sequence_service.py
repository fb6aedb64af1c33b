import pytest
from hypothesis import given, strategies as st

from app.schemas.sequences import DegreeSequence, FamilyMatch, MatchFamily
from app.services.sequence_service import (
    condition3_template,
    condition4_template,
    format_sequence,
    h_of,
    m_of,
    match_condition3,
    match_condition4,
    parse_sequence,
    sigma,
)
from app.utils.exception_handlers import InvalidDataException, SequenceParseError
from tests.conftest import seq


@pytest.mark.parametrize(
    "text, terms",
    [
        ("4^2,3^2,2", (4, 4, 3, 3, 2)),
        ("2", (2,)),
        ("2, 3 ,4", (4, 3, 2)),
        ("1^3 5", (5, 1, 1, 1)),
    ],
)
def test_parse_sequence(text, terms):
    assert parse_sequence(text).terms == terms


@pytest.mark.parametrize(
    "text, code",
    [
        ("", "empty_sequence"),
        (" , ", "empty_sequence"),
        ("3 2^0", "non_positive_repeat"),
        ("3,0", "non_positive_degree"),
        ("3,-2", "non_positive_degree"),
        ("3,x", "malformed_item"),
        ("3^^2", "malformed_item"),
    ],
)
def test_parse_sequence_rejects(text, code):
    with pytest.raises(SequenceParseError) as excinfo:
        parse_sequence(text)
    assert excinfo.value.code == code
    assert excinfo.value.exit_code == 2


@pytest.mark.parametrize(
    "sequence, text",
    [
        (seq(4, 4, 3, 3, 2), "4^2,3^2,2"),
        (seq(2, 2, 2), "2^3"),
        (seq(5), "5"),
        (DegreeSequence(terms=()), ""),
    ],
)
def test_format_sequence(sequence, text):
    assert format_sequence(sequence) == text


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=15))
def test_format_then_parse_is_identity(values):
    sequence = DegreeSequence.of(values)
    assert parse_sequence(format_sequence(sequence)) == sequence


def test_sigma_and_extremes():
    assert sigma(seq(4, 4, 4, 4, 4)) == 20
    assert sigma(seq(5, 5, 2, 2, 2, 2)) == 4 * 6 - 6
    assert sigma(seq(3, 3, 3, 3, 3, 3)) == 18
    assert m_of(seq(3, 2, 2, 1)) == 3
    assert h_of(seq(3, 2, 2, 1)) == 1
    assert m_of(seq(2, 2)) == h_of(seq(2, 2)) == 2


def test_degree_sequence_rejects_unsorted_or_zero():
    with pytest.raises(InvalidDataException):
        DegreeSequence(terms=(2, 3))
    with pytest.raises(InvalidDataException):
        DegreeSequence(terms=(2, 0))


def test_d_is_one_based_and_zero_past_the_end():
    sequence = seq(4, 3, 2)
    assert sequence.d(1) == 4
    assert sequence.d(3) == 2
    assert sequence.d(5) == 0
    assert sequence.runs() == [(4, 1), (3, 1), (2, 1)]


def test_match_condition3():
    match = match_condition3(seq(6, 3, 2, 2, 2, 2, 1))
    assert match == FamilyMatch(family=MatchFamily.COND3, n=7, k=3, t=4)
    assert match_condition3(seq(6, 4, 2, 2, 2, 2, 1)) is None
    assert match_condition3(seq(4, 4, 2, 2, 2)) is None


def test_match_condition4():
    assert match_condition4(seq(4, 4, 2, 2, 2)).parameters == {"k": 1, "i": 3}
    match = match_condition4(seq(5, 4, 2, 2, 2, 1))
    assert (match.n, match.k, match.i) == (6, 1, 3)
    assert match_condition4(seq(3, 3, 2, 2, 2)) is None


@st.composite
def condition3_parameters(draw):
    n = draw(st.integers(min_value=6, max_value=30))
    k = draw(st.integers(min_value=3, max_value=n - 2))
    t = draw(st.integers(min_value=3, max_value=n - 2).filter(lambda t: (k - t) % 2 == 1))
    return n, k, t


@st.composite
def condition4_parameters(draw):
    n = draw(st.integers(min_value=5, max_value=30))
    k = draw(st.integers(min_value=1, max_value=(n - 1) // 2 - 1))
    i = draw(st.integers(min_value=3, max_value=n - 2 * k))
    return n, k, i


@given(condition3_parameters())
def test_condition3_template_is_matched_back(params):
    n, k, t = params
    match = match_condition3(condition3_template(n, k, t))
    assert match is not None
    assert (match.n, match.k, match.t) == (n, k, t)


@given(condition4_parameters())
def test_condition4_template_is_matched_back(params):
    n, k, i = params
    template = condition4_template(n, k, i)
    match = match_condition4(template)
    assert match is not None
    assert (match.n, match.k, match.i) == (n, k, i)
    assert match.template() == template


def test_family_match_validates_ranges():
    with pytest.raises(InvalidDataException):
        FamilyMatch(family=MatchFamily.COND3, n=7, k=4, t=4)
    with pytest.raises(InvalidDataException):
        FamilyMatch(family=MatchFamily.COND4, n=5, k=2, i=3)


def _condition3_grid(max_n: int = 12):
    for n in range(5, max_n + 1):
        for k in range(3, n - 1):
            for t in range(3, n - 1):
                if (k - t) % 2 == 1:
                    yield n, k, t


def _condition4_grid(max_n: int = 12):
    for n in range(5, max_n + 1):
        for k in range(1, (n - 1) // 2):
            for i in range(3, n - 2 * k + 1):
                yield n, k, i


def test_condition3_family_is_matched_exhaustively():
    grid = list(_condition3_grid())
    assert grid
    for n, k, t in grid:
        template = condition3_template(n, k, t)
        assert template.sigma == 2 * n - 3 + k + t
        assert template.sigma % 2 == 0, (n, k, t)
        match = match_condition3(template)
        assert match is not None, (n, k, t)
        assert (match.n, match.k, match.t) == (n, k, t)


def test_condition3_family_is_empty_at_five():
    assert not [params for params in _condition3_grid() if params[0] == 5]


def test_condition4_family_is_matched_exhaustively():
    grid = list(_condition4_grid())
    assert grid
    for n, k, i in grid:
        template = condition4_template(n, k, i)
        assert template.n == n
        assert template.sigma % 2 == 0, (n, k, i)
        match = match_condition4(template)
        assert match is not None, (n, k, i)
        assert (match.n, match.k, match.i) == (n, k, i)
        assert match.template() == template


def test_parse_sequence_rejects_huge_repeat_counts():
    with pytest.raises(SequenceParseError) as excinfo:
        parse_sequence("2^999999999999")
    assert excinfo.value.code == "too_many_terms"
    assert excinfo.value.token == "2^999999999999"
    assert excinfo.value.exit_code == 2


def test_parse_sequence_term_limit_comes_from_settings(monkeypatch):
    monkeypatch.setenv("POTGRAPH_MAX_TERMS", "5")
    assert parse_sequence("2^5").n == 5
    with pytest.raises(SequenceParseError) as excinfo:
        parse_sequence("3^2,2^4")
    assert excinfo.value.code == "too_many_terms"
    assert excinfo.value.token == "2^4"
