"""Symplectic spaces, orthogonals, and the lagrangian grassmannian.

The enumeration here is cross-checked against a deliberately naive
oracle that lists every n-dimensional subspace in reduced row echelon
form and filters for isotropy; the two routes share no code beyond the
subspace container.
"""

import itertools
import random

import pytest

from canrel import (
    EnumerationUnsupported,
    GF,
    Matrix,
    NotSymplectic,
    QQ,
    Subspace,
    bar,
    classify,
    enumerate_lagrangians,
    lagrangian_count,
    product,
    random_lagrangian,
    standard_space,
    symp_orthogonal,
)

from conftest import lag1, lag2, rng_for, std


def test_standard_space_form():
    x = std(2)
    pairs = {(i, j): x.pairing(tuple(int(k == i) for k in range(4)),
                               tuple(int(k == j) for k in range(4)))
             for i in range(4) for j in range(4)}
    assert pairs[(0, 2)] == 1 and pairs[(2, 0)] == -1
    assert pairs[(1, 3)] == 1 and pairs[(3, 1)] == -1
    assert pairs[(0, 1)] == 0 and pairs[(0, 3)] == 0


def test_point_space():
    pt = std(0)
    assert pt.dim == 0 and pt.n == 0


def test_odd_dimension_rejected():
    with pytest.raises(NotSymplectic):
        from canrel import SymplecticSpace
        SymplecticSpace(QQ, 1, Matrix(QQ, [[QQ.zero]]))


def test_degenerate_form_rejected():
    from canrel import SymplecticSpace
    z = Matrix.zeros(QQ, 2, 2)
    with pytest.raises(NotSymplectic):
        SymplecticSpace(QQ, 2, z)


def test_char_two_needs_zero_diagonal():
    # over GF(2) antisymmetry is vacuous; the alternating condition is not
    from canrel import SymplecticSpace
    one = GF(2).one
    m = Matrix(GF(2), [[one, one], [one, one]])
    with pytest.raises(NotSymplectic):
        SymplecticSpace(GF(2), 2, m)


def test_bar_flips_the_form():
    x = std(1)
    y = bar(x)
    assert y.pairing((1, 0), (0, 1)) == -x.pairing((1, 0), (0, 1))
    assert bar(y) == x


def test_product_is_block_diagonal():
    x, y = std(1), std(1)
    p = product(x, bar(y))
    assert p.dim == 4
    assert p.pairing((1, 0, 0, 0), (0, 1, 0, 0)) == 1
    assert p.pairing((0, 0, 1, 0), (0, 0, 0, 1)) == -1
    assert p.pairing((1, 0, 0, 0), (0, 0, 0, 1)) == 0


def test_orthogonal_of_lagrangian_is_itself():
    x = std(1)
    assert symp_orthogonal(x, lag1()) == lag1()
    assert symp_orthogonal(x, lag2()) == lag2()


def test_classification_of_standard_subspaces():
    x = std(2)
    iso = Subspace.span(QQ, 4, [(1, 0, 0, 0)])
    coiso = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    lag = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    symp = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    assert classify(x, iso).isotropic and not classify(x, iso).coisotropic
    assert classify(x, coiso).coisotropic and not classify(x, coiso).isotropic
    r = classify(x, lag)
    assert r.lagrangian and r.isotropic and r.coisotropic
    assert classify(x, symp).symplectic


def test_double_orthogonal():
    x = std(2)
    s = Subspace.span(QQ, 4, [(1, 2, 3, 4)])
    assert symp_orthogonal(x, symp_orthogonal(x, s)) == s


# --- naive oracle ----------------------------------------------------------


def rref_pattern_subspaces(field, ambient, k):
    """Every k-dimensional subspace, one reduced echelon basis per pattern.

    Pivot columns run over all k-subsets; free entries fill positions to
    the right of each pivot that are not themselves pivot columns.
    """
    elems = [field.from_int(i) for i in range(field.p)]
    for pivots in itertools.combinations(range(ambient), k):
        free = [(i, j) for i in range(k) for j in range(ambient)
                if j > pivots[i] and j not in pivots]
        for vals in itertools.product(elems, repeat=len(free)):
            rows = [[field.zero] * ambient for _ in range(k)]
            for i, pj in enumerate(pivots):
                rows[i][pj] = field.one
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield [tuple(r) for r in rows]


def naive_lagrangians(x):
    found = set()
    for rows in rref_pattern_subspaces(x.field, x.dim, x.n):
        if all(not x.pairing(u, v) for u in rows for v in rows):
            found.add(Subspace.span(x.field, x.dim, rows))
    return found


GRASSMANNIAN_SIZES = [(2, 1, 3), (3, 1, 4), (5, 1, 6), (2, 2, 15), (3, 2, 40)]


@pytest.mark.parametrize("p,n,expected", GRASSMANNIAN_SIZES)
def test_enumeration_matches_naive_oracle(p, n, expected):
    x = standard_space(n, GF(p))
    grass = enumerate_lagrangians(x)
    assert len(grass.members) == expected
    assert lagrangian_count(p, n) == expected
    assert set(grass.members) == naive_lagrangians(x)
    for s in grass:
        assert classify(x, s).lagrangian


def test_enumeration_members_are_sorted_and_distinct():
    grass = enumerate_lagrangians(standard_space(2, GF(2)))
    keys = [s.sort_key() for s in grass.members]
    assert keys == sorted(keys)
    assert len(set(grass.members)) == len(grass.members)


def test_enumeration_rejects_rationals_and_big_inputs():
    with pytest.raises(EnumerationUnsupported):
        enumerate_lagrangians(std(1))
    with pytest.raises(EnumerationUnsupported):
        enumerate_lagrangians(standard_space(4, GF(2)))
    with pytest.raises(EnumerationUnsupported):
        enumerate_lagrangians(standard_space(1, GF(11)))


def test_random_lagrangians_are_lagrangian():
    rng = rng_for("random lagrangians")
    for field in (QQ, GF(2), GF(5)):
        for n in (1, 2):
            x = standard_space(n, field)
            for _ in range(10):
                s = random_lagrangian(x, rng)
                assert classify(x, s).lagrangian


def test_nonstandard_form_enumeration():
    # a scaled form has the same lagrangians as the standard one
    two = GF(3).from_int(2)
    x = standard_space(1, GF(3))
    form = Matrix(GF(3), [[two * e for e in row] for row in x.form.rows])
    from canrel import SymplecticSpace
    y = SymplecticSpace(GF(3), 2, form)
    assert set(enumerate_lagrangians(y).members) == set(enumerate_lagrangians(x).members)
