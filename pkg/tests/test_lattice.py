import itertools
import random

import pytest

from paragame.controllers import arena_controller, lattice_controller
from paragame.controllers.bench_controller import gen_family
from paragame.core.deadline import Deadline
from paragame.core.errors import LatticeCapExceeded, LatticeError, SolveTimeout
from paragame.core.intervalset import EMPTY, NATURALS, IntervalSet
from paragame.models.lattice import Lattice

SAMPLE_ELEMENTS = ["*", "2-*", "1,3-*", "1-2", "1", "2", "3-*", ""]


def _brute_covers(lattice: Lattice) -> set[tuple[int, int]]:
    ids = range(len(lattice))
    strictly_below = {
        i: {j for j in ids if j != i and lattice.elem(j).is_subset(lattice.elem(i))} for i in ids
    }
    return {
        (p, c) for p in ids for c in strictly_below[p]
        if not any(c in strictly_below[z] for z in strictly_below[p])
    }


@pytest.fixture(scope="module")
def family_lattice_512() -> Lattice:
    return lattice_controller.build(gen_family("D-NW-1", 8))


def test_sample_lattice_elements(sample_lattice):
    assert {k.format() for k in sample_lattice.elements} == set(SAMPLE_ELEMENTS)
    assert len(sample_lattice) == 8
    assert sample_lattice.elem(Lattice.TOP) == NATURALS
    assert sample_lattice.elem(Lattice.BOTTOM) == EMPTY


def test_sample_hasse_diagram(sample_lattice, S):
    lat = sample_lattice
    edges = {(lat.elem(p).format(), lat.elem(c).format()) for p, c in lat.covers()}
    assert edges == {
        ("*", "2-*"), ("*", "1,3-*"), ("*", "1-2"),
        ("2-*", "2"), ("2-*", "3-*"),
        ("1,3-*", "1"), ("1,3-*", "3-*"),
        ("1-2", "1"), ("1-2", "2"),
        ("1", ""), ("2", ""), ("3-*", ""),
    }
    assert lat.height() == 3
    assert lat.covers() == _brute_covers(lat)


def test_same_lattice_without_c_edges(sample_text):
    text = "\n".join(line for line in sample_text.splitlines() if not line.startswith("edge v c"))
    game = arena_controller.parse_arena(text)
    assert {k.format() for k in lattice_controller.build(game).elements} == set(SAMPLE_ELEMENTS)


def test_meet_join_and_dag_order_agree_with_sets(sample_lattice):
    lat = sample_lattice
    for i, j in itertools.product(range(len(lat)), repeat=2):
        a, b = lat.elem(i), lat.elem(j)
        assert lat.elem(lat.meet(i, j)) == a & b
        assert lat.elem(lat.join(i, j)) == a | b
        assert lat.leq(i, j) == a.is_subset(b)
        assert lat.dag_leq(i, j) == a.is_subset(b)


def test_element_set_does_not_depend_on_generator_order(sample):
    generators = sample.arena.generators()
    forward = lattice_controller.build(sample, seeds=generators)
    backward = lattice_controller.build(sample, seeds=list(reversed(generators)))
    assert forward.element_set() == backward.element_set()


@pytest.mark.parametrize("family", ["D-NW-1", "D-NW-2"])
@pytest.mark.parametrize("n", range(2, 9))
def test_family_lattice_sizes(family, n):
    lattice = lattice_controller.build(gen_family(family, n))
    assert len(lattice) == 2 ** (n + 1)


def test_insertion_in_any_order_keeps_covers_exact(S):
    elements = [S(t) for t in SAMPLE_ELEMENTS[1:-1]]
    rng = random.Random(3)
    for _ in range(20):
        rng.shuffle(elements)
        lattice = Lattice.from_elements(elements)
        assert lattice.covers() == _brute_covers(lattice)


def test_cap_is_enforced(sample):
    with pytest.raises(LatticeCapExceeded) as exc:
        lattice_controller.build(sample, cap=5)
    assert exc.value.cap == 5


def test_expired_deadline_stops_the_build(sample):
    with pytest.raises(SolveTimeout):
        lattice_controller.build(sample, deadline=Deadline(-1.0))


def test_frozen_lattice_rejects_new_elements(sample_lattice, S):
    assert sample_lattice.insert(S("2")) == sample_lattice.id_of(S("2"))
    with pytest.raises(LatticeError):
        sample_lattice.insert(S("5"))
    with pytest.raises(LatticeError):
        sample_lattice.id_of(S("7-9"))


def test_stats_and_dump(sample, sample_lattice):
    stats = lattice_controller.stats(sample_lattice, sample)
    assert (stats.size, stats.height, stats.atoms) == (8, 3, 3)
    lines = lattice_controller.dump(sample_lattice).splitlines()
    assert len(lines) == 8
    top = lines[0].split("\t")
    assert top[:3] == ["0", "*", ""]
    bottom = lines[1].split("\t")
    assert bottom[1] == "" and bottom[3] == ""


def test_atoms_partition_naturals(sample):
    atoms = lattice_controller.compute_atoms(sample.arena.generators())
    assert [a.format() for a in atoms] == ["1", "2", "3-*"]
    union = EMPTY
    for a in atoms:
        union = union | a
    assert union == NATURALS
    assert all(not (a & b) for a, b in itertools.combinations(atoms, 2))
    assert isinstance(atoms[0], IntervalSet)


def test_hasse_diagram_of_a_512_element_lattice(family_lattice_512):
    assert len(family_lattice_512) == 512
    assert family_lattice_512.covers() == _brute_covers(family_lattice_512)
    assert family_lattice_512.height() == 9


@pytest.mark.parametrize("which", ["sample", "family"])
def test_closed_under_union_intersection_and_difference(which, sample_lattice, family_lattice_512):
    lattice = sample_lattice if which == "sample" else family_lattice_512
    elements = lattice.element_set()
    rng = random.Random(21)
    for _ in range(500):
        a = lattice.elem(rng.randrange(len(lattice)))
        b = lattice.elem(rng.randrange(len(lattice)))
        assert a | b in elements
        assert a & b in elements
        assert a.difference(b) in elements
        assert b.difference(a) in elements
