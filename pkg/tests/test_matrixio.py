import pytest
from hypothesis import given, settings, strategies as st

from calabiwilf import matrixio
from calabiwilf.errors import InvalidMatrix
from calabiwilf.rng import RngStream
from calabiwilf.sampler import random_subspace


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 3, 7]), st.integers(0, 12), st.data())
def test_round_trip_both_formats(q, n, data):
    k = data.draw(st.integers(0, n))
    M = random_subspace(n, k, q, RngStream(data.draw(st.integers(0, 1000))))
    assert matrixio.parse_text(matrixio.to_text(M)) == [M]
    assert matrixio.parse_json_lines(matrixio.to_json(M)) == [M]
    assert matrixio.from_record(matrixio.to_record(M)) == M


def test_text_header(printed_matrix):
    text = matrixio.to_text(printed_matrix)
    assert text.splitlines()[0] == "# q=7 n=10 k=5 pivots=6 7 8 9 10"
    assert text.splitlines()[1] == "5 6 3 2 5 1 0 0 0 0"


def test_rejects_bad_input():
    with pytest.raises(InvalidMatrix):
        matrixio.parse_text("# q=3 n=2 k=1\n1 2\n")
    with pytest.raises(InvalidMatrix):
        matrixio.parse_text("1 0\n")
    with pytest.raises(InvalidMatrix):
        matrixio.from_record({"q": 2, "n": 2, "k": 2, "rows": [[1, 0]]})
