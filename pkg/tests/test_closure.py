"""Multiple-valued composition and limits of one-parameter families."""

from fractions import Fraction

import pytest

from canrel import (
    CanonicalRelation,
    GF,
    ParametricRelation,
    QT,
    QQ,
    Subspace,
    UnsupportedField,
    bar,
    closure_limit_check,
    compose,
    enumerate_lagrangians,
    identity_relation,
    in_closure,
    lagrangian_count,
    product,
    sabot_compose,
    standard_space,
    transversality,
)
from canrel.linalg import tpow

from conftest import four_corner_relations, gamma, rng_for, std

F = Fraction


def test_in_closure_contains_the_composition():
    l12, l21, l11, l22 = four_corner_relations()
    t = in_closure(l12, l21, l11)
    assert t.member and t.codim == 0 and t.deficiency == 1


def test_in_closure_diagonal_of_deficient_pair():
    l12, l21, _, _ = four_corner_relations()
    t = in_closure(l12, l21, identity_relation(std(1)))
    assert t.member and t.codim == 1 and t.deficiency == 1


def test_in_closure_rejects_distant_candidates():
    l12, l21, _, l22 = four_corner_relations()
    t = in_closure(l12, l21, l22)
    assert not t.member and t.codim == 2


def test_transversal_pair_closure_is_tight():
    t = in_closure(gamma(2), gamma(F(1, 2)), gamma(5))
    assert not t.member and t.deficiency == 0
    t2 = in_closure(gamma(2), gamma(F(1, 2)), identity_relation(std(1)))
    assert t2.member and t2.codim == 0


def test_sabot_needs_a_finite_field():
    l12, l21, _, _ = four_corner_relations()
    with pytest.raises(UnsupportedField):
        sabot_compose(l12, l21)


def corner_relations_mod(p):
    return four_corner_relations(GF(p))


def test_sabot_counts_mod_two():
    l12, l21, l11, _ = corner_relations_mod(2)
    members = sabot_compose(l12, l21)
    assert len(members) == 7
    graphs = {h.graph for h in members}
    assert l11.graph in graphs
    assert compose(l12, l21).graph in graphs


def test_sabot_counts_mod_three():
    l12, l21, l11, _ = corner_relations_mod(3)
    members = sabot_compose(l12, l21)
    assert len(members) == 13
    assert l11.graph in {h.graph for h in members}


def test_sabot_count_complements_formula():
    # non-members of the deficiency-1 pair are exactly the lagrangians
    # meeting the composition trivially; over GF(p) in dimension 4 there
    # are p^3 of those among the 15 or 40 total
    for p, total in ((2, 15), (3, 40)):
        l12, l21, _, _ = corner_relations_mod(p)
        members = sabot_compose(l12, l21)
        assert len(members) == total - p**3


def test_sabot_of_transversal_pair_is_singleton():
    g2, ghalf = gamma(2, GF(5)), gamma(3, GF(5))
    members = sabot_compose(g2, ghalf)
    assert len(members) == 1
    assert members[0] == compose(g2, ghalf)


def test_sabot_members_are_sorted_canonically():
    l12, l21, _, _ = corner_relations_mod(3)
    keys = [h.graph.sort_key() for h in sabot_compose(l12, l21)]
    assert keys == sorted(keys)


def test_sabot_transpose_symmetry_sampled():
    rng = rng_for("sabot transpose symmetry")
    from canrel import random_relation
    x = std(1, GF(3))
    for _ in range(6):
        f = random_relation(x, x, rng)
        g = random_relation(x, x, rng)
        left = {h.graph for h in sabot_compose(f, g)}
        right = {h.graph for h in sabot_compose(g.transpose(), f.transpose())}
        assert {h.transpose().graph
                for h in sabot_compose(f, g)} == right
        assert len(left) == len(right)


# --- families and limits ---------------------------------------------------


def scaling_family():
    """Graphs of (q, p) -> (q / t, t p); at t = 0 the graph degenerates."""
    x = std(1)
    one, t = QT.one, tpow(1)
    return ParametricRelation(x, x, [
        (one, QT.zero, t, QT.zero),
        (QT.zero, t, QT.zero, one),
    ])


def inverse_scaling_family():
    x = std(1)
    one, t = QT.one, tpow(1)
    return ParametricRelation(x, x, [
        (t, QT.zero, one, QT.zero),
        (QT.zero, one, QT.zero, t),
    ])


def test_family_limits_are_product_lagrangians():
    from conftest import lag1, lag2
    f0 = scaling_family().limit()
    g0 = inverse_scaling_family().limit()
    assert f0.graph == Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 0, 0, 1)])
    assert g0.graph == Subspace.span(QQ, 4, [(0, 1, 0, 0), (0, 0, 1, 0)])
    assert f0.range() == lag1() and f0.domain() == lag2()
    assert g0.range() == lag2() and g0.domain() == lag1()


def test_family_evaluation_matches_specialization():
    fam = scaling_family()
    at2 = fam.family.at(F(2))
    assert at2 == gamma(F(1, 2)).graph


def test_limit_discontinuity_of_composition():
    rep = closure_limit_check(scaling_family(), inverse_scaling_family())
    assert rep.limit_of_compositions == identity_relation(std(1))
    assert rep.composition_of_limits.graph == Subspace.span(
        QQ, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    assert not rep.continuous
    assert rep.triple.member
    assert rep.triple.deficiency == 1 and rep.triple.codim == 1


def test_continuous_family_composition():
    # a family constant in t composes continuously
    x = std(1)
    one = QT.one
    const = ParametricRelation(x, x, [
        (one, QT.zero, one, QT.zero),
        (QT.zero, one, QT.zero, one),
    ])
    rep = closure_limit_check(const, const)
    assert rep.continuous
    assert rep.limit_of_compositions == identity_relation(x)


def test_family_must_be_generically_lagrangian():
    x = std(1)
    one, t = QT.one, tpow(1)
    from canrel import NotLagrangian
    with pytest.raises(NotLagrangian):
        ParametricRelation(x, x, [
            (one, QT.zero, QT.zero, QT.zero),
            (QT.zero, one, t, QT.zero),
        ])


def test_family_needs_rational_base():
    x = std(1, GF(3))
    with pytest.raises(UnsupportedField):
        ParametricRelation(x, x, [
            (QT.one, QT.zero, QT.one, QT.zero),
            (QT.zero, QT.one, QT.zero, QT.one),
        ])
