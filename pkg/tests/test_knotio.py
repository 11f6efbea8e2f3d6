import json

import pytest
from hypothesis import given, strategies as st

from knotbound.knotio import (
    BraidWord,
    InvariantViolation,
    KnotInputError,
    PDCode,
    Pretzel,
    PresentationSyntaxError,
    Twist,
    canonical,
    component_count,
    components_at,
    crossing_sign,
    format_presentation,
    parse_braid,
    parse_pd,
    parse_presentation,
    parse_pretzel,
    parse_twist,
    presentation_from_json,
    pretzel_diagram,
    smooth_crossing,
    switch_crossing,
    to_pd,
    twist_diagram,
    writhe,
)


@st.composite
def braids(draw, max_strands=4, max_len=8):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord((), 1)
    letters = draw(
        st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len)
    )
    return BraidWord(tuple(letters), n)


families = st.one_of(
    st.builds(Pretzel, st.integers(-1, 2), st.integers(-1, 2), st.integers(-1, 2)),
    st.builds(Twist, st.integers(0, 4)),
)
diagrams = st.one_of(braids().map(to_pd), families.map(to_pd))


def test_knot_atlas_trefoil_is_left_handed():
    d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    assert d.signs == (-1, -1, -1)
    assert writhe(d) == -3
    assert component_count(d) == 1


def test_braid_trefoil(right_trefoil):
    assert right_trefoil.signs == (1, 1, 1)
    assert writhe(right_trefoil) == 3
    assert component_count(right_trefoil) == 1


def test_parse_pd_triple_label():
    with pytest.raises(InvariantViolation):
        parse_pd("X[1,1,1,2]")


def test_parse_pd_syntax_error():
    with pytest.raises(PresentationSyntaxError):
        parse_pd("X[1,2,3]")


def test_kink():
    d = parse_pd("X[1,2,2,1]")
    assert d.signs == (-1,)
    s = smooth_crossing(d, 0)
    assert s == PDCode((), (), 2)
    assert s.format() == "Loop[2]"
    assert component_count(s) == 2


def test_empty_pd_is_unknot():
    d = parse_pd("")
    assert component_count(d) == 1 and len(d) == 0


def test_loop_token():
    d = parse_pd("X[1,2,2,1] Loop[1]")
    assert component_count(d) == 2
    assert parse_pd(d.format()) == d


def test_switch_flips_sign(right_trefoil):
    s = switch_crossing(right_trefoil, 0)
    assert crossing_sign(s, 0) == -1
    assert s.crossings[0][0] == right_trefoil.crossings[0][3]


def test_smoothing_trefoil_gives_hopf(right_trefoil):
    s = smooth_crossing(right_trefoil, 1)
    assert component_count(s) == 2
    assert len(s) == 2


@given(diagrams, st.data())
def test_switch_is_involution(d, data):
    if not len(d):
        return
    i = data.draw(st.integers(0, len(d) - 1))
    assert switch_crossing(switch_crossing(d, i), i) == d
    assert component_count(switch_crossing(d, i)) == component_count(d)


@given(diagrams, st.data())
def test_smoothing_changes_components_by_one(d, data):
    if not len(d):
        return
    i = data.draw(st.integers(0, len(d) - 1))
    under, over = components_at(d, i)
    delta = component_count(smooth_crossing(d, i)) - component_count(d)
    assert delta == (-1 if under != over else 1)


@given(braids())
def test_braid_components_are_permutation_cycles(w):
    d = to_pd(w)
    assert component_count(d) == w.permutation_cycles()
    assert len(d) == len(w.letters)
    assert d.signs == tuple(1 if x > 0 else -1 for x in w.letters)
    d.validate()


@given(diagrams)
def test_text_round_trip_canonical(d):
    assert parse_pd(d.format()) == d


@given(diagrams, st.data())
def test_text_round_trip_after_smoothing(d, data):
    if not len(d):
        return
    s = smooth_crossing(d, data.draw(st.integers(0, len(d) - 1)))
    assert parse_pd(s.format()) == s


@given(diagrams, st.data())
def test_json_round_trip_switched(d, data):
    if not len(d):
        return
    s = switch_crossing(d, data.draw(st.integers(0, len(d) - 1)))
    assert PDCode.from_json(json.loads(json.dumps(s.to_json()))) == s
    c = canonical(s.crossings, s.signs, s.loops)
    assert parse_pd(c.format()) == c


def test_from_json_validates():
    with pytest.raises(InvariantViolation):
        PDCode.from_json({"crossings": [[1, 1, 1, 2]], "signs": [1], "loops": 0})


def test_pretzel_diagram_shape():
    d, bands = pretzel_diagram(Pretzel(1, 1, 1))
    assert len(d) == 9
    assert [len(b) for b in bands] == [3, 3, 3]
    assert all(s == 1 for s in d.signs)
    assert component_count(d) == 1


def test_twist_diagram_shape():
    d, band = twist_diagram(Twist(2))
    assert len(band) == 4
    assert [d.signs[i] for i in band] == [1, 1, 1, 1]
    assert component_count(d) == 1
    assert twist_diagram(Twist(0))[0] == PDCode()


@pytest.mark.parametrize(
    "text, kind, want",
    [
        ("2: 1 1 1", "braid", BraidWord((1, 1, 1), 2)),
        ("3,3,3", "pretzel", Pretzel(1, 1, 1)),
        ("-1, 1, 5", "pretzel", Pretzel(-1, 0, 2)),
        ("4", "twist", Twist(2)),
    ],
)
def test_parse_presentations(text, kind, want):
    p = parse_presentation(text, kind)
    assert p == want
    assert presentation_from_json(json.dumps(format_presentation(p))) == p


@pytest.mark.parametrize(
    "fn, text",
    [
        (parse_braid, "1 1 1"),
        (parse_braid, "2: 1 x"),
        (parse_braid, "2: 2"),
        (parse_pretzel, "3,3"),
        (parse_pretzel, "3,2,3"),
        (parse_twist, "3"),
        (parse_twist, "-2"),
        (parse_twist, "two"),
    ],
)
def test_presentation_errors(fn, text):
    with pytest.raises(KnotInputError):
        fn(text)


def test_unknown_kind():
    with pytest.raises(KnotInputError):
        parse_presentation("1", "dt")
