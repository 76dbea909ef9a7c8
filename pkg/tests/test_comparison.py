import pytest
from hypothesis import given, settings, strategies as st

from citeratio.comparison import Entity, compare_entities
from citeratio.errors import EmptyEntityList, UnknownField
from citeratio.normalization import Method, Mode, compute_baseline
from tests.conftest import tables


@pytest.fixture
def base(nsf):
    return compute_baseline(nsf, "mathematics")


def test_example_one(base):
    res = compare_entities(base, [Entity("physicist", "physics", 70),
                                  Entity("engineer", "engineering-technology", 20)])
    assert [r.entity.label for r in res.rows] == ["engineer", "physicist"]
    assert [r.rank for r in res.rows] == [1, 2]
    assert [f"{r.score:.2f}" for r in res.rows] == ["4.00", "3.68"]
    assert res.reference.slug == "mathematics" and res.mode is Mode.ROUNDED


def test_tie_shares_rank(base):
    res = compare_entities(base, [Entity("a", "mathematics", 10), Entity("b", "mathematics", 10)])
    assert [(r.entity.label, r.rank) for r in res.rows] == [("a", 1), ("b", 1)]


def test_equivalent_entities_all_tie(base):
    ents = [Entity("m", "mathematics", 1), Entity("c", "chemistry", 15), Entity("p", "physics", 19)]
    res = compare_entities(base, ents)
    # 1/1, 15/15, 19/19
    assert [r.score for r in res.rows] == [1.0, 1.0, 1.0]
    assert [r.rank for r in res.rows] == [1, 1, 1]


def test_competition_ranking(base):
    ents = [Entity("x", "mathematics", 5), Entity("y", "mathematics", 9),
            Entity("z", "mathematics", 9), Entity("w", "mathematics", 1)]
    res = compare_entities(base, ents)
    assert [(r.entity.label, r.rank) for r in res.rows] == [("y", 1), ("z", 1), ("x", 3), ("w", 4)]


def test_errors(base):
    with pytest.raises(EmptyEntityList):
        compare_entities(base, [])
    with pytest.raises(UnknownField):
        compare_entities(base, [Entity("a", "astrology", 3)])
    with pytest.raises(ValueError):
        Entity("", "physics", 1)
    with pytest.raises(ValueError):
        Entity("a", "physics", -1)


def test_single_entity_rank_one(base):
    assert compare_entities(base, [Entity("solo", "biology", 0)]).rows[0].rank == 1


def test_display_rounding_does_not_drive_rank(base):
    # 37/19 = 1.947 and 10/5 = 2.0 sit close together; the order must follow the exact values
    res = compare_entities(base, [Entity("a", "physics", 37), Entity("b", "engineering-technology", 10)])
    assert [r.entity.label for r in res.rows] == ["b", "a"]
    assert res.rows[1].rank == 2


def _ranks(res):
    return {r.entity.label: r.rank for r in res.rows}


entity_lists = st.lists(st.integers(0, 10**6), min_size=1, max_size=8)


@settings(max_examples=40)
@given(tables(), st.data())
def test_rank_invariants(t, data):
    method = data.draw(st.sampled_from(list(Method)))
    mode = data.draw(st.sampled_from([Mode.ROUNDED, Mode.EXACT]))
    b = compute_baseline(t, data.draw(st.sampled_from(t.fields)), method)
    counts = data.draw(entity_lists)
    ents = [Entity(f"e{i}", data.draw(st.sampled_from(t.slugs)), c) for i, c in enumerate(counts)]
    res = compare_entities(b, ents, mode)

    k = data.draw(st.integers(1, 1000))
    scaled = [Entity(e.label, e.field, e.citations * k) for e in ents]
    assert _ranks(compare_entities(b, scaled, mode)) == _ranks(res)

    extra = Entity("new", data.draw(st.sampled_from(t.slugs)), data.draw(st.integers(0, 10**6)))
    grown = compare_entities(b, ents + [extra], mode)
    assert [r.entity.label for r in grown.rows if r.entity.label != "new"] == [
        r.entity.label for r in res.rows
    ]


@settings(max_examples=40)
@given(tables(), st.data())
def test_pooled_exact_reference_change_keeps_ranks(t, data):
    counts = data.draw(entity_lists)
    ents = [Entity(f"e{i}", data.draw(st.sampled_from(t.slugs)), c) for i, c in enumerate(counts)]
    r1, r2 = data.draw(st.sampled_from(t.fields)), data.draw(st.sampled_from(t.fields))
    res1 = compare_entities(compute_baseline(t, r1, Method.POOLED_TOTALS), ents, Mode.EXACT)
    res2 = compare_entities(compute_baseline(t, r2, Method.POOLED_TOTALS), ents, Mode.EXACT)
    assert [r.entity.label for r in res1.rows] == [r.entity.label for r in res2.rows]
    assert _ranks(res1) == _ranks(res2)
