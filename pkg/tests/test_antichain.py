import random

import pytest

from paragame.controllers import lattice_controller
from paragame.controllers.bench_controller import gen_family
from paragame.core.intervalset import EMPTY, NATURALS
from paragame.models.antichain import SET_ORDER, KnowledgeAntichain, LatticeOrder, leq_sim

VERTICES = ["v", "x1", "x2", "y1", "y2", "s", "t"]


def _sets(pairs):
    return KnowledgeAntichain.reduce(SET_ORDER, VERTICES, pairs)


def _random_pairs(rng, lattice, vertices, count):
    return [(rng.choice(vertices), rng.randrange(len(lattice))) for _ in range(count)]


@pytest.fixture(params=["sample", "D-NW-1-5"])
def any_lattice(request, sample_lattice):
    if request.param == "sample":
        return sample_lattice
    return lattice_controller.build(gen_family("D-NW-1", 5))


def test_reduce_drops_dominated_pairs(S):
    reduced = _sets([("t", NATURALS), ("y1", S("1")), ("y1", S("1-2")), ("y2", S("1-2"))])
    assert reduced.at("t") == (NATURALS,)
    assert reduced.at("y1") == (S("1-2"),)
    assert reduced.at("y2") == (S("1-2"),)
    # vertices without entries hold the explicit ∅
    assert reduced.at("v") == (EMPTY,)


def test_reduce_is_idempotent_and_collapses_duplicates(S):
    once = _sets([("v", S("1")), ("v", S("2")), ("v", EMPTY), ("v", EMPTY)])
    assert set(once.at("v")) == {S("1"), S("2")}
    assert once.join([]) == once
    assert _sets([("v", EMPTY), ("v", EMPTY)]).at("v") == (EMPTY,)


def test_dominated(S):
    w1 = _sets([("t", NATURALS), ("v", S("3-*")), ("y1", NATURALS), ("y2", NATURALS)])
    assert w1.dominated("v", S("3-*") & S("1,3-*"))
    assert not w1.dominated("v", NATURALS)
    assert all(w1.dominated(v, EMPTY) for v in VERTICES)


def test_join_and_meet_examples(S):
    a = _sets([("v", S("1"))])
    b = _sets([("v", S("1-2"))])
    assert a.join(b).at("v") == (S("1-2"),)
    assert a.join(a) == a

    c = _sets([("v", S("2-*"))])
    d = _sets([("v", S("1,3-*"))])
    assert c.meet(d).at("v") == (S("3-*"),)


def test_leq_sim_basics(S):
    only_empty = _sets([])
    anything = _sets([("v", S("4"))])
    assert only_empty.leq_sim(anything)
    assert not anything.leq_sim(only_empty)
    pairs = [("v", S("1")), ("v", S("1-3")), ("x1", S("2"))]
    assert leq_sim(SET_ORDER, _sets(pairs).pairs(), pairs)
    assert leq_sim(SET_ORDER, pairs, _sets(pairs).pairs())


def test_reduced_family_is_below_a_raw_family_missing_vertices(S):
    reduced = KnowledgeAntichain.reduce(SET_ORDER, ["v", "t"], [("v", S("1"))])
    assert reduced.at("t") == (EMPTY,)
    assert leq_sim(SET_ORDER, reduced.pairs(), [("v", S("1"))])
    assert leq_sim(SET_ORDER, [("t", EMPTY)], [])
    assert not leq_sim(SET_ORDER, [("t", S("1"))], [("v", S("1"))])


def test_equivalences_on_random_families(any_lattice):
    """reduce(L) = reduce(L') iff L ⊑̃ L' ⊑̃ L iff the down-closures coincide."""
    order = LatticeOrder(any_lattice)
    vertices = ["p", "q"]
    rng = random.Random(11)
    for _ in range(300):
        left = _random_pairs(rng, any_lattice, vertices, rng.randint(0, 4))
        right = _random_pairs(rng, any_lattice, vertices, rng.randint(0, 4))
        a = KnowledgeAntichain.reduce(order, vertices, left)
        b = KnowledgeAntichain.reduce(order, vertices, right)

        same_reduced = a.equals(b)
        mutual = a.leq_sim(b) and b.leq_sim(a)
        same_closure = a.down_closure(any_lattice) == b.down_closure(any_lattice)
        assert same_reduced == mutual == same_closure

        # the reduced form keeps the down-closure and is ⊑̃-equivalent to the input
        assert leq_sim(order, a.pairs(), left)
        assert leq_sim(order, left, a.pairs())


def test_join_and_meet_are_bounds_on_down_closures(any_lattice):
    order = LatticeOrder(any_lattice)
    vertices = ["p", "q"]
    rng = random.Random(5)
    for _ in range(200):
        a = KnowledgeAntichain.reduce(order, vertices, _random_pairs(rng, any_lattice, vertices, 3))
        b = KnowledgeAntichain.reduce(order, vertices, _random_pairs(rng, any_lattice, vertices, 3))
        ca, cb = a.down_closure(any_lattice), b.down_closure(any_lattice)
        assert a.join(b).down_closure(any_lattice) == ca | cb
        assert a.meet(b).down_closure(any_lattice) == ca & cb


def test_lattice_and_set_backings_agree(sample_lattice, S):
    by_id = KnowledgeAntichain.reduce(
        LatticeOrder(sample_lattice), VERTICES,
        [("x1", sample_lattice.id_of(S("1,3-*"))), ("x1", sample_lattice.id_of(S("1")))],
    )
    by_set = _sets([("x1", S("1,3-*"))])
    assert by_id.equals(by_set)
    assert by_id.to_sets() == by_set
    assert by_set.to_lattice(sample_lattice) == by_id


def test_region_text_is_sorted_and_stable(S):
    w = _sets([("v", S("3-*")), ("v", S("1")), ("t", NATURALS)])
    lines = w.format().splitlines()
    assert lines[0] == "v : 1 | 3-*"
    assert lines[5] == "s :"
    assert lines[6] == "t : *"


@pytest.mark.parametrize("vertex", VERTICES)
def test_initial_antichain(vertex):
    w0 = KnowledgeAntichain.initial(SET_ORDER, VERTICES, "t")
    expected = NATURALS if vertex == "t" else EMPTY
    assert w0.at(vertex) == (expected,)
