"""Coisotropic reduction: quotient spaces, reduced lagrangians, factorization."""

from fractions import Fraction

import pytest

from canrel import (
    GF,
    NotCoisotropic,
    QQ,
    Subspace,
    classify,
    compose,
    compose_via_reduction,
    factorize,
    identity_relation,
    random_relation,
    reduce_lagrangian,
    reduce_space,
    standard_space,
    transversality,
)

from conftest import gamma, random_coisotropic, rng_for, std

F = Fraction


def test_reduce_rejects_non_coisotropic():
    x = std(2)
    not_coiso = Subspace.span(QQ, 4, [(1, 0, 0, 0)])
    with pytest.raises(NotCoisotropic):
        reduce_space(x, not_coiso)


def test_reduction_of_codim_one_coisotropic():
    # C = span(e1, e2, e3) in the standard 4-space has C-perp = span(e2)
    x = std(2)
    c = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    r = reduce_space(x, c)
    assert r.kernel == Subspace.span(QQ, 4, [(0, 1, 0, 0)])
    assert r.reduced.dim == 2
    assert r.reduced == std(1)


def test_reduction_relation_is_a_left_inverse():
    rng = rng_for("reduction left inverse")
    for field in (QQ, GF(3)):
        x = std(2, field)
        for _ in range(10):
            c = random_coisotropic(x, rng)
            r = reduce_space(x, c)
            rel = r.relation
            assert compose(rel, rel.transpose()) == identity_relation(r.reduced)


def test_reduction_relation_has_expected_range_and_domain():
    x = std(2)
    c = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    r = reduce_space(x, c)
    assert r.relation.domain() == c
    assert r.relation.range().is_full()


def test_reduce_whole_space_is_identity_like():
    x = std(1)
    r = reduce_space(x, Subspace.full(QQ, 2))
    assert r.reduced.dim == 2
    assert r.kernel.is_zero()


def test_reduce_lagrangian_through_coisotropic():
    x = std(2)
    c = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    r = reduce_space(x, c)
    horizontal = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    red = reduce_lagrangian(r, horizontal)
    assert classify(r.reduced, red).lagrangian


def test_reduced_lagrangians_are_lagrangian_random():
    rng = rng_for("reduced lagrangians")
    from canrel import random_lagrangian
    for field in (QQ, GF(5)):
        x = std(2, field)
        for _ in range(12):
            c = random_coisotropic(x, rng)
            r = reduce_space(x, c)
            lag = random_lagrangian(x, rng)
            red = reduce_lagrangian(r, lag)
            assert classify(r.reduced, red).lagrangian


def test_factorize_round_trip():
    rng = rng_for("factorize round trip")
    for field in (QQ, GF(3)):
        x, y = std(1, field), std(2, field)
        for _ in range(10):
            f = random_relation(x, y, rng)
            fac = factorize(f)
            left = fac.range_reduction.relation
            right = fac.domain_reduction.relation
            assert transversality(left.transpose(), compose(fac.core, right)).transversal
            assert compose(left.transpose(), compose(fac.core, right)) == f


def test_factorize_core_of_scaling_graph_is_full_rank():
    fac = factorize(gamma(2))
    assert fac.core.graph.dim == 2
    assert fac.core.range().is_full()
    assert fac.core.domain().is_full()


def test_compose_via_reduction_agrees_with_direct():
    rng = rng_for("compose via reduction")
    for field in (QQ, GF(3)):
        x, y, z = std(1, field), std(2, field), std(1, field)
        for _ in range(10):
            f = random_relation(x, y, rng)
            g = random_relation(y, z, rng)
            assert compose_via_reduction(f, g) == compose(f, g)


def test_compose_via_reduction_on_worked_pair():
    from conftest import four_corner_relations
    l12, l21, l11, _ = four_corner_relations()
    assert compose_via_reduction(l12, l21) == l11
    assert compose_via_reduction(gamma(3), gamma(F(1, 3))) == identity_relation(std(1))
