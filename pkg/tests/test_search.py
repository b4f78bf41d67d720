from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from lierep.reps import Irrep, dual
from lierep.rootsys import build
from lierep.search import (
    SemisimpleCandidate,
    candidates_for,
    center_descriptor,
    ordered_factorizations,
    report,
    run_search,
    search,
)
from lierep.tensor import decompose


def test_factorizations():
    assert ordered_factorizations(27) == [(27,), (3, 9), (3, 3, 3)]
    assert ordered_factorizations(7) == [(7,)]
    assert ordered_factorizations(12) == [(12,), (2, 6), (3, 4), (2, 2, 3)]
    with pytest.raises(ValueError):
        ordered_factorizations(1)


@given(st.integers(2, 2000))
def test_factorizations_are_complete_and_sound(d):
    facts = ordered_factorizations(d)
    assert len(set(facts)) == len(facts)
    for f in facts:
        assert prod(f) == d and list(f) == sorted(f) and min(f) >= 2

    def count(rest, lo):
        if rest == 1:
            return 1
        return sum(count(rest // k, k) for k in range(lo, rest + 1) if rest % k == 0)

    assert len(facts) == count(d, 2)


def test_search_27_78():
    trace = run_search(27, 78)
    results = trace.results
    assert len(results) == 1
    (res,) = results
    (factor,) = res.candidate.factors
    assert factor.label() == "E6:w1"
    assert [[w.label() for w in wit] for wit in res.witnesses] == [["E6:w2"]]
    assert res.image_descriptors() == ["E6/Z"]
    (d,) = res.decompositions
    assert d.dimensions() == [1, 78, 650]
    assert d.total_dimension() == 729
    assert trace.eliminated == len(trace.candidates) - 1


def test_search_27_78_report():
    text = report(run_search(27, 78))
    assert "27 ⊗ 27* = 1 + 78 + 650  (total 729)" in text
    assert "image E6/Z" in text


def test_search_3_8():
    labels = [[f.label() for f in r.candidate.factors] for r in search(3, 8)]
    assert labels == [["A2:w1"]]


def test_search_empty():
    trace = run_search(2, 5)
    assert trace.results == []
    assert "no candidates" in report(trace)


@pytest.mark.parametrize("d", [4, 6, 9, 12])
def test_trivial_summand_accepts_all(d):
    trace = run_search(d, 1)
    assert trace.eliminated == 0
    assert len(trace.results) == sum(len(candidates_for(f)) for f in ordered_factorizations(d))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 16), st.integers(1, 300))
def test_search_soundness(dv, dw):
    trace = run_search(dv, dw)
    assert trace.eliminated + len(trace.results) == len(trace.candidates)
    for c in trace.candidates:
        assert c.candidate.dimension == dv
        for wit in c.witnesses:
            assert prod(w.dimension for w in wit) == dw
            for f, w in zip(c.candidate.factors, wit):
                assert decompose(f, dual(f)).multiplicity(w.highest_weight) > 0


def test_candidate_rejects_trivial_factor():
    with pytest.raises(ValueError):
        SemisimpleCandidate((Irrep(build("A1"), (0,)),))
    with pytest.raises(ValueError):
        SemisimpleCandidate(())


def test_center_descriptor():
    assert center_descriptor(Irrep(build("E6"), (0, 1, 0, 0, 0, 0))) == "E6/Z"
    assert center_descriptor(Irrep(build("E6"), (1, 0, 0, 0, 0, 0))) == "E6"


def test_repeated_factor_dimensions_count_multisets():
    # two factors of dim 3 from {A1:2w1, A2:w1}: three unordered choices
    assert len(candidates_for((3, 3))) == 3


def test_to_dict():
    d = run_search(27, 78).to_dict()
    assert d["results"][0]["images"] == ["E6/Z"]
    assert d["results"][0]["factorization"] == [27]
    assert d["candidates_examined"] == d["eliminated"] + 1
