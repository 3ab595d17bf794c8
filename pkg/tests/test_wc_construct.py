import random

import pytest
from hypothesis import given, strategies as st

from pconn import (ArcColoring, CycleOrder, Digraph, LandingError, biorient,
                   balanced_hamiltonian_wc_coloring, complete_biorientation, cycle_decompose,
                   directed_cycle, euler_alternating_coloring, is_properly_walk_connected,
                   make_circulant, short_chord_wc_coloring, wc_number)
from pconn.errors import PreconditionError, VerificationError
from pconn.wc_construct import iter_cycle_decompositions, short_chord_construction

from graphgen import random_balanced_hamiltonian


def test_euler_examples():
    C4 = directed_cycle(4)
    c = euler_alternating_coloring(C4)
    assert c.colors == (1, 2, 1, 2)
    P3 = biorient([(0, 1), (1, 2)], 3)
    assert is_properly_walk_connected(P3, euler_alternating_coloring(P3)).ok
    with pytest.raises(PreconditionError, match="odd arc count"):
        euler_alternating_coloring(directed_cycle(5))


def test_euler_rejects_unbalanced_and_disconnected():
    with pytest.raises(PreconditionError, match="unbalanced"):
        euler_alternating_coloring(Digraph(3, [(0, 1), (1, 2), (2, 0), (0, 2)]))
    with pytest.raises(PreconditionError, match="not strong"):
        euler_alternating_coloring(Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)]))


def test_cycle_decompose_examples():
    two = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert sorted(cycle_decompose(two).cycles) == [(0, 1, 2), (3, 4, 5)]
    assert cycle_decompose(two, []).cycles == ()
    K3 = complete_biorientation(3)
    dec = cycle_decompose(K3)
    assert sorted(dec.arcs()) == list(K3.arcs)
    with pytest.raises(PreconditionError):
        cycle_decompose(K3, [(0, 1)])


def test_backtracking_decompositions_are_partitions():
    D = complete_biorientation(4)
    decs = list(iter_cycle_decompositions(D))
    assert len(decs) > 1
    for dec in decs:
        assert sorted(dec.arcs()) == list(D.arcs)


def test_balanced_ham_examples():
    C6 = directed_cycle(6)
    got = balanced_hamiltonian_wc_coloring(C6, CycleOrder(range(6)))
    assert got.route == "even cycle"
    for n in (5, 9):
        D = make_circulant(n, [1, 3])
        got = balanced_hamiltonian_wc_coloring(D, CycleOrder(range(n)))
        assert got.route == "greedy decomposition"
        assert is_properly_walk_connected(D, got.coloring).ok


def test_balanced_ham_odd_directed_cycle_has_no_two_coloring():
    # balanced and Hamiltonian, yet every 2-coloring leaves a pair unreachable
    for n in (3, 5, 7):
        with pytest.raises(VerificationError, match="no 2-coloring found"):
            balanced_hamiltonian_wc_coloring(directed_cycle(n), CycleOrder(range(n)))
        assert wc_number(directed_cycle(n)).number == 3


def test_balanced_ham_odd_cycle_plus_two_cycle():
    # D - A(C) is the single even cycle 4 <-> 5, and no 2-coloring of D works at all
    D = Digraph(7, [(0, 4), (1, 5), (2, 1), (3, 2), (4, 3), (4, 5), (5, 4), (5, 6), (6, 0)])
    C = CycleOrder([6, 0, 4, 3, 2, 1, 5])
    with pytest.raises(VerificationError, match="no 2-coloring found"):
        balanced_hamiltonian_wc_coloring(D, C)
    assert wc_number(D).number == 3


def test_balanced_ham_preconditions():
    D = Digraph(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
    with pytest.raises(PreconditionError, match="unbalanced"):
        balanced_hamiltonian_wc_coloring(D, CycleOrder(range(3)))
    with pytest.raises(PreconditionError):
        balanced_hamiltonian_wc_coloring(directed_cycle(4), CycleOrder([0, 2, 1, 3]))


@given(st.integers(3, 7), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_balanced_ham_random(n, extra, seed):
    D, order = random_balanced_hamiltonian(random.Random(seed), n, extra)
    try:
        got = balanced_hamiltonian_wc_coloring(D, CycleOrder(order))
    except VerificationError:
        # only legitimate when no 2-coloring exists at all
        assert wc_number(D, cap=2).exceeds_cap
        return
    assert is_properly_walk_connected(D, got.coloring).ok


def test_short_chord_examples():
    D = make_circulant(8, [1, 3])
    got = short_chord_wc_coloring(D, CycleOrder(range(8)))
    assert got.route == "even cycle"
    D = make_circulant(9, [1, 2])
    got = short_chord_wc_coloring(D, CycleOrder(range(9)))
    assert got.route == "case 1"
    assert is_properly_walk_connected(D, got.coloring.filled(1)).ok


def test_short_chord_c9_1_3_landing_gap():
    D = make_circulant(9, [1, 3])
    C = CycleOrder(range(9))
    with pytest.raises(LandingError):
        short_chord_construction(D, C)
    got = short_chord_wc_coloring(D, C)
    assert got.route == "exhaustive search"
    assert is_properly_walk_connected(D, got.coloring).ok


def test_short_chord_case_2_instance():
    D = make_circulant(11, [1, 5])
    got = short_chord_wc_coloring(D, CycleOrder(range(11)))
    assert got.route == "case 2"
    assert is_properly_walk_connected(D, got.coloring.filled(1)).ok


def test_short_chord_preconditions():
    with pytest.raises(PreconditionError, match="longer than"):
        short_chord_wc_coloring(make_circulant(9, [1, 6]), CycleOrder(range(9)))
    with pytest.raises(PreconditionError, match="degree"):
        short_chord_wc_coloring(directed_cycle(5), CycleOrder(range(5)))


@given(st.sampled_from([(9, [1, 2]), (11, [1, 5]), (13, [1, 3, 4]), (12, [1, 5]), (7, [1, 2, 3])]),
       st.integers(0, 2**32 - 1))
def test_partial_coloring_extension(inst, seed):
    n, S = inst
    D = make_circulant(n, S)
    got = short_chord_wc_coloring(D, CycleOrder(range(n)))
    rng = random.Random(seed)
    colors = tuple(c or rng.randint(1, 2) for c in got.coloring.colors)
    assert is_properly_walk_connected(D, ArcColoring(colors, 2)).ok
