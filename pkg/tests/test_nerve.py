"""Tuples of endorelations: faces, degeneracies, simplicial identities."""

from fractions import Fraction

import pytest

from canrel import (
    GF,
    NerveTuple,
    QQ,
    bar,
    check_simplicial_identities,
    compose,
    degeneracy,
    enumerate_lagrangians,
    face,
    identity_relation,
    is_completely_transversal,
    product,
    random_tuple,
    transversality,
)
from canrel.relations import CanonicalRelation

from conftest import four_corner_relations, gamma, rng_for, std

F = Fraction


def test_tuple_entries_must_be_endorelations():
    x, y = std(1), std(2)
    from canrel import ShapeMismatch, random_relation
    f = random_relation(x, y, rng_for(3))
    with pytest.raises(ShapeMismatch):
        NerveTuple(x, [f])


def test_outer_faces_drop_ends():
    a, b = gamma(2), gamma(3)
    t = NerveTuple(std(1), [a, b])
    assert face(0, t).entries == (b,)
    assert face(2, t).entries == (a,)


def test_inner_face_composes_adjacent_entries():
    a, b = gamma(2), gamma(3)
    t = NerveTuple(std(1), [a, b])
    assert face(1, t).entries == (compose(a, b),)


def test_degeneracy_inserts_identity():
    x = std(1)
    a = gamma(2)
    t = NerveTuple(x, [a])
    i = identity_relation(x)
    assert degeneracy(0, t).entries == (i, a)
    assert degeneracy(1, t).entries == (a, i)
    zero = NerveTuple(x, [])
    assert degeneracy(0, zero).entries == (i,)


def test_face_of_degeneracy_is_identity_map():
    t = NerveTuple(std(1), [gamma(2)])
    for i in (0, 1):
        st = degeneracy(i, t)
        assert face(i, st) == t
        assert face(i + 1, st) == t


def test_face_index_out_of_range():
    t = NerveTuple(std(1), [gamma(2)])
    with pytest.raises(IndexError):
        face(2, t)
    with pytest.raises(IndexError):
        face(-1, t)
    with pytest.raises(IndexError):
        degeneracy(2, t)


def test_zero_tuple_has_no_faces():
    t = NerveTuple(std(1), [])
    with pytest.raises(IndexError):
        face(0, t)


def test_simplicial_identities_sampled():
    x = std(1, GF(3))
    for k in range(5):
        rep = check_simplicial_identities(x, k, samples=6, seed=11)
        assert rep.ok, rep.failures
        assert rep.instances > 0 or k == 0


def test_pair_transversality_matches_the_two_entry_predicate():
    x = std(1, GF(2))
    prod = enumerate_lagrangians(product(x, bar(x)))
    rels = [CanonicalRelation(x, x, s) for s in prod.members]
    for f in rels[:8]:
        for g in rels[:8]:
            t = NerveTuple(x, [f, g])
            assert is_completely_transversal(t) == transversality(f, g).transversal


def test_short_tuples_are_always_completely_transversal():
    x = std(1)
    assert is_completely_transversal(NerveTuple(x, []))
    assert is_completely_transversal(NerveTuple(x, [four_corner_relations()[0]]))


def test_completely_transversal_closed_under_operators():
    rng = rng_for("transversal closure")
    x = std(1, GF(3))
    found = 0
    attempts = 0
    while found < 12 and attempts < 400:
        attempts += 1
        t = random_tuple(x, rng.randint(2, 3), rng)
        if not is_completely_transversal(t):
            continue
        found += 1
        for i in range(t.k + 1):
            assert is_completely_transversal(face(i, t))
        for i in range(t.k + 1):
            assert is_completely_transversal(degeneracy(i, t))
    assert found == 12


def test_identity_tuples_are_completely_transversal():
    x = std(2, GF(3))
    i = identity_relation(x)
    for k in range(4):
        assert is_completely_transversal(NerveTuple(x, [i] * k))


def test_graph_tuples_are_completely_transversal():
    t = NerveTuple(std(1), [gamma(2), gamma(F(1, 3)), gamma(5)])
    assert is_completely_transversal(t)
    assert face(1, t).entries[0] == gamma(F(2, 3))
