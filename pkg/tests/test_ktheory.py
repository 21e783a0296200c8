"""Braid mutations and twists on lattice classes of exceptional collections."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octoweyl.errors import IndexOutOfRange, NotNormOne, NotNormTwo, RankMismatch
from octoweyl.ktheory import (
    KCollection,
    braid_act,
    braid_word_act,
    coxeter_from_collection,
    euler_gram,
    is_full,
    numerically_exceptional,
    parse_braid_word,
    parse_move,
    simples_collection,
    spherical_twist_K,
    twist_matrix,
)
from octoweyl.lattice import octopus_lattice, star_lattice
from octoweyl.quiver import Weights, default_lambda
from octoweyl.weyl import coxeter_element, simple_reflection

weight_tuples = st.lists(st.integers(2, 4), min_size=3, max_size=4).map(tuple)


def test_simples_are_numerically_exceptional():
    for lat in (star_lattice((2, 2, 2)), octopus_lattice((2, 2, 2))):
        k = simples_collection(lat)
        assert numerically_exceptional(k).ok
        assert is_full(k)


def test_swapped_simples_fail_with_witness():
    lat = octopus_lattice((2, 2, 2))
    k = simples_collection(lat)
    swapped = KCollection((k.classes[1], k.classes[0]) + k.classes[2:], lat)
    check = numerically_exceptional(swapped)
    assert not check.ok
    i, j, value, expected = check.witness
    assert (i, j) == (1, 0) and value == -1 and expected == 0


def test_rank_mismatch():
    lat = octopus_lattice((2, 2, 2))
    with pytest.raises(RankMismatch):
        KCollection((lat.basis_vector("1"),), lat)


def test_single_right_mutation_worked_example():
    # First pair of the octopus simples: pairing -1, so the moved class
    # becomes minus the sum of the two.
    lat = octopus_lattice((2, 2, 2))
    k = braid_act(simples_collection(lat), ("b", 1, 1))
    assert k.classes[0] == (0, 1, 0, 0, 0)
    assert k.classes[1] == (-1, -1, 0, 0, 0)
    assert numerically_exceptional(k).ok


def test_moves_invert_and_repeat():
    lat = octopus_lattice((2, 2, 3))
    k = simples_collection(lat)
    for i in range(1, len(k)):
        assert braid_word_act(k, [("b", i, 1), ("b", i, -1)]).classes == k.classes
        assert braid_word_act(k, [("b", i, -1), ("b", i, 1)]).classes == k.classes
    for i in range(1, len(k) + 1):
        assert braid_word_act(k, [("e", i), ("e", i)]).classes == k.classes


@settings(max_examples=20, deadline=None)
@given(weight_tuples)
def test_braid_relations_pointwise(a):
    lat = octopus_lattice(Weights(a), default_lambda(len(a)))
    k = simples_collection(lat)
    mu = len(k)
    for i in range(1, mu):
        for j in range(i + 2, mu):
            assert (
                braid_word_act(k, [("b", i, 1), ("b", j, 1)]).classes
                == braid_word_act(k, [("b", j, 1), ("b", i, 1)]).classes
            )
    for i in range(1, mu - 1):
        assert (
            braid_word_act(k, [("b", i, 1), ("b", i + 1, 1), ("b", i, 1)]).classes
            == braid_word_act(k, [("b", i + 1, 1), ("b", i, 1), ("b", i + 1, 1)]).classes
        )
    for i in range(1, mu):
        assert (
            braid_word_act(k, [("b", i, 1), ("e", i)]).classes
            == braid_word_act(k, [("e", i + 1), ("b", i, 1)]).classes
        )


@settings(max_examples=20, deadline=None)
@given(weight_tuples, st.data())
def test_mutations_preserve_exceptionality_and_fullness(a, data):
    lat = octopus_lattice(Weights(a), default_lambda(len(a)))
    k = simples_collection(lat)
    mu = len(k)
    moves = [("b", i, s) for i in range(1, mu) for s in (1, -1)]
    moves += [("e", i) for i in range(1, mu + 1)]
    word = data.draw(st.lists(st.sampled_from(moves), max_size=6), label="word")
    image = braid_word_act(k, word)
    assert numerically_exceptional(image).ok
    assert is_full(image)
    assert euler_gram(image)[0][0] == 1


def test_mutation_class_formula_convention():
    # Moved class equals pairing * pivot - moved, exactly when the reverse
    # pairing vanishes; this pins the sign convention.
    lat = octopus_lattice((2, 3, 3))
    k = simples_collection(lat)
    for i in range(1, len(k)):
        x, y = k.classes[i - 1], k.classes[i]
        if lat.euler_form(y, x) != 0:
            continue
        coeff = lat.euler_form(x, y)
        expected = tuple(coeff * b - a for a, b in zip(x, y))
        assert braid_act(k, ("b", i, 1)).classes[i] == expected


def test_pivot_norm_guard():
    lat = octopus_lattice((2, 2, 2))
    bad = (1, 0, 0, 0, 1)  # self-pairing 4
    classes = (bad,) + simples_collection(lat).classes[1:]
    k = KCollection(classes, lat)
    with pytest.raises(NotNormOne):
        braid_act(k, ("b", 1, -1))  # pivot is the bad first entry
    with pytest.raises(IndexOutOfRange):
        braid_act(k, ("b", 9, 1))
    with pytest.raises(IndexOutOfRange):
        braid_act(k, ("e", 0))


def test_coxeter_from_collection_invariance():
    lat = octopus_lattice((2, 2, 3))
    k = simples_collection(lat)
    c0 = coxeter_from_collection(k).matrix
    assert c0 == coxeter_element(lat).matrix
    mu = len(k)
    for i in range(1, mu):
        assert coxeter_from_collection(braid_act(k, ("b", i, 1))).matrix == c0
    for i in range(1, mu + 1):
        assert coxeter_from_collection(braid_act(k, ("e", i))).matrix == c0


def test_spherical_twist_examples():
    lat = octopus_lattice((2, 2, 2))
    a1 = lat.basis_vector("1")
    ext = lat.basis_vector("1*")
    arm = lat.basis_vector((2, 1))
    # twisting a class by itself lands on its negative
    assert spherical_twist_K(lat, a1, a1) == (-1, 0, 0, 0, 0)
    # orthogonal classes are untouched
    arm_b = lat.basis_vector((3, 1))
    assert spherical_twist_K(lat, arm, arm_b) == arm_b
    # the hub/extension pairing is +2
    assert spherical_twist_K(lat, ext, a1) == (1, 0, 0, 0, -2)
    with pytest.raises(NotNormTwo):
        spherical_twist_K(lat, lat.delta, a1)


def test_twist_matrix_equals_reflection():
    for a in [(2, 2, 2), (2, 3, 4)]:
        lat = octopus_lattice(Weights(a))
        for v in lat.vertices:
            assert (
                twist_matrix(lat, lat.basis_vector(v))
                == simple_reflection(lat, v).matrix
            )


def test_move_parsing():
    assert parse_move("b3") == ("b", 3, 1)
    assert parse_move("B3") == ("b", 3, -1)
    assert parse_move("e2") == ("e", 2)
    assert parse_braid_word("b1, b2 e3,B1") == (
        ("b", 1, 1),
        ("b", 2, 1),
        ("e", 3),
        ("b", 1, -1),
    )
    with pytest.raises(ValueError):
        parse_move("q7")
