from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lierep.rootsys import (
    InvalidType,
    SimpleType,
    build,
    dominant_conjugate,
    dual_weight,
    format_weight,
    parse_weight,
    weight_pairing,
    weyl_orbit,
)


def small_types(max_rank=6):
    out = []
    for n in range(1, max_rank + 1):
        out.append(f"A{n}")
        if n >= 2:
            out += [f"B{n}", f"C{n}"]
        if n >= 3:
            out.append(f"D{n}")
    return out + ["E6", "F4", "G2"]


ROOT_COUNTS = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


def expected_root_count(t):
    letter, n = t[0], int(t[1:])
    if letter == "A":
        return n * (n + 1) // 2
    if letter in "BC":
        return n * n
    if letter == "D":
        return n * (n - 1)
    return ROOT_COUNTS[t]


@pytest.mark.parametrize("t", small_types() + ["E7", "E8"])
def test_positive_root_count(t):
    assert len(build(t).positive_roots) == expected_root_count(t)


def test_examples():
    assert len(build("G2").positive_roots) == 6
    a1 = build("A1")
    assert a1.cartan == ((2,),) and len(a1.positive_roots) == 1
    e6 = build("E6")
    assert 2 * len(e6.positive_roots) == 78 - 6


@pytest.mark.parametrize("t", small_types())
def test_cartan_shape(t):
    rs = build(t)
    for i, row in enumerate(rs.cartan):
        for j, a in enumerate(row):
            assert a == 2 if i == j else a in (0, -1, -2, -3)


@pytest.mark.parametrize("t", small_types())
def test_pairing_symmetric_positive_definite(t):
    rs = build(t)
    m = sympy.Matrix(rs.pairing)
    assert m == m.T
    assert all(m[:k, :k].det() > 0 for k in range(1, rs.rank + 1))


@pytest.mark.parametrize("t", small_types())
def test_long_roots_have_length_two(t):
    rs = build(t)
    lengths = {weight_pairing(rs, a, a) for a in rs.root_weights}
    assert max(lengths) == 2


@pytest.mark.parametrize("t", small_types())
def test_rho_pairs_positively_with_positive_roots(t):
    rs = build(t)
    assert all(weight_pairing(rs, rs.rho, a) > 0 for a in rs.root_weights)


def test_pairing_values():
    a1 = build("A1")
    assert weight_pairing(a1, (1,), (1,)) == Fraction(1, 2)
    e6 = build("E6")
    assert weight_pairing(e6, (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0)) == Fraction(4, 3)
    with pytest.raises(ValueError):
        weight_pairing(e6, (1, 0), (1, 0))


@settings(max_examples=60, deadline=None)
@given(t=st.sampled_from(small_types(4)), data=st.data())
def test_pairing_bilinear_symmetric(t, data):
    rs = build(t)
    vec = st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank).map(tuple)
    a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
    assert weight_pairing(rs, (0,) * rs.rank, b) == 0
    assert weight_pairing(rs, a, b) == weight_pairing(rs, b, a)
    ab = tuple(x + y for x, y in zip(a, b))
    assert weight_pairing(rs, ab, c) == weight_pairing(rs, a, c) + weight_pairing(rs, b, c)


@pytest.mark.parametrize(
    "bad", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 2)]
)
def test_inadmissible_rank_rejected(bad):
    with pytest.raises(InvalidType, match="rank|letter"):
        SimpleType(*bad)


def test_parse_type():
    assert SimpleType.parse("a5") == SimpleType("A", 5)
    assert str(SimpleType.parse("E6")) == "E6"
    with pytest.raises(InvalidType):
        SimpleType.parse("E")


def test_dominant_conjugate_examples():
    a1 = build("A1")
    assert dominant_conjugate(a1, (3,)) == ((3,), 1, False)
    assert dominant_conjugate(a1, (-1,))[2] is True
    assert dominant_conjugate(a1, (-2,)) == ((0,), -1, False)


@settings(max_examples=80, deadline=None)
@given(t=st.sampled_from(small_types(5)), data=st.data())
def test_dominant_conjugate_properties(t, data):
    rs = build(t)
    w = data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank).map(tuple))
    out, sign, singular = dominant_conjugate(rs, w)
    assert sign in (1, -1)
    shifted = tuple(c + 1 for c in out)
    assert min(shifted) >= 0
    assert singular == (0 in shifted)
    # same orbit: |w + rho| is Weyl invariant
    wr = tuple(c + 1 for c in w)
    assert weight_pairing(rs, wr, wr) == weight_pairing(rs, shifted, shifted)
    if min(w) >= 0:
        assert (out, sign, singular) == (w, 1, False)


def test_dual_weight_examples():
    assert dual_weight(build("E6"), (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    assert dual_weight(build("B3"), (2, 1, 3)) == (2, 1, 3)
    assert dual_weight(build("A2"), (2, 2)) == (2, 2)
    assert dual_weight(build("D5"), (0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1)
    assert dual_weight(build("D4"), (0, 0, 1, 0)) == (0, 0, 1, 0)
    with pytest.raises(ValueError):
        dual_weight(build("A2"), (-1, 0))


@settings(max_examples=80, deadline=None)
@given(t=st.sampled_from(small_types(6)), data=st.data())
def test_dual_is_minus_w0(t, data):
    # -w0(w) is the dominant element of the orbit of -w
    rs = build(t)
    w = data.draw(st.lists(st.integers(0, 3), min_size=rs.rank, max_size=rs.rank).map(tuple))
    neg, _ = rs.kernel.reflect_to_dominant(tuple(-c for c in w))
    assert dual_weight(rs, w) == neg
    assert dual_weight(rs, dual_weight(rs, w)) == w


def test_orbit_sizes():
    assert len(weyl_orbit(build("E6"), (1, 0, 0, 0, 0, 0))) == 27
    assert len(weyl_orbit(build("A2"), (1, 1))) == 6
    assert len(weyl_orbit(build("G2"), (1, 1))) == 12


def test_root_lattice():
    e6 = build("E6")
    assert e6.in_root_lattice((0, 1, 0, 0, 0, 0))
    assert not e6.in_root_lattice((1, 0, 0, 0, 0, 0))
    assert e6.highest_root == (0, 1, 0, 0, 0, 0)


@pytest.mark.parametrize(
    "text,rank,w",
    [("w1", 6, (1, 0, 0, 0, 0, 0)), ("2w1+2w2", 2, (2, 2)), ("0", 3, (0, 0, 0)),
     ("1,0,2", None, (1, 0, 2)), ("-2w1", 1, (-2,)), ("w2-w1", 2, (-1, 1))],
)
def test_parse_weight(text, rank, w):
    assert parse_weight(text, rank) == w


@settings(max_examples=50)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=8))
def test_format_parse_roundtrip(coords):
    w = tuple(coords)
    assert parse_weight(format_weight(w), len(w)) == w


def test_parse_weight_errors():
    with pytest.raises(ValueError):
        parse_weight("w7", 6)
    with pytest.raises(ValueError):
        parse_weight("x1", 2)
