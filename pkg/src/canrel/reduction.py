"""Coisotropic reduction and the reduction picture of composition.

Given a coisotropic C inside X, the quotient C / C-perp inherits a
symplectic form, and the relation r_C = {([y], y) : y in C} pushes
lagrangians of X down to lagrangians of the reduced space.  Every
canonical relation factors through the reductions of its target by its
range and of its source by its domain, and composition itself is the
reduction of the product relation by X x diag(Y) x Z.
"""

from dataclasses import dataclass

from .linalg import (
    CanrelError,
    Matrix,
    Subspace,
    quotient_with_section,
)
from .symplectic import (
    SymplecticSpace,
    bar,
    classify,
    product,
    symp_orthogonal,
)
from .relations import (
    CanonicalRelation,
    NotLagrangian,
    compose,
    lagrangian_as_relation,
    transversality,
    _middle_diagonal,
    _product_blocks,
)


class NotCoisotropic(CanrelError):
    """The subspace a reduction was asked for is not coisotropic."""


@dataclass(frozen=True)
class ReductionData:
    ambient: SymplecticSpace
    coisotropic: Subspace
    kernel: Subspace
    reduced: SymplecticSpace
    projection: Matrix
    section: Matrix
    relation: CanonicalRelation


def reduce_space(x, c):
    """Reduction of x through the coisotropic c.

    Returns the reduced space C / C-perp with its induced form, the
    coordinate projection (kernel C-perp), the section realizing the
    chosen complement, and the reduction relation r_C.
    """
    if not classify(x, c).coisotropic:
        raise NotCoisotropic("reduction through a non-coisotropic subspace")
    k = symp_orthogonal(x, c)
    q, section = quotient_with_section(k, c)
    m = c.dim - k.dim
    lifts = section.cols()
    form = Matrix(x.field, [[x.pairing(u, v) for v in lifts] for u in lifts], ncols=m)
    reduced = SymplecticSpace(x.field, m, form)
    rows = [tuple(q.apply(y)) + y for y in c.basis_vectors()]
    rel = CanonicalRelation(reduced, x, Subspace.span(x.field, m + x.dim, rows))
    return ReductionData(ambient=x, coisotropic=c, kernel=k, reduced=reduced,
                         projection=q, section=section, relation=rel)


def reduce_lagrangian(r, lag):
    """Push a lagrangian of the ambient space into the reduced space.

    Computed as the image of lag under r_C; cross-checked against the
    direct description (lag meet C) / (lag meet C-perp).
    """
    x = r.ambient
    if not classify(x, lag).lagrangian:
        raise NotLagrangian("can only reduce a lagrangian subspace")
    out = r.relation.apply(lag)
    direct = Subspace.span(
        x.field, r.reduced.dim,
        [r.projection.apply(v) for v in lag.intersect(r.coisotropic).basis_vectors()])
    assert out == direct
    assert classify(r.reduced, out).lagrangian
    # the composition with r_C is transversal exactly when lag + C is everything
    state = lagrangian_as_relation(x, lag, "from_point")
    assert transversality(r.relation, state).transversal == lag.sum(r.coisotropic).is_full()
    return out


@dataclass(frozen=True)
class Factorization:
    range_reduction: ReductionData
    domain_reduction: ReductionData
    core: CanonicalRelation


def _is_iso_graph(rel):
    """Does the relation's graph define a linear isomorphism?"""
    field = rel.graph.field
    dx, dy = rel.target.dim, rel.source.dim
    if not rel.range().is_full() or not rel.domain().is_full():
        return False
    zero = field.zero
    for blk in ((0, dx), (dx, dx + dy)):
        cyl = Subspace.span(
            field, dx + dy,
            [tuple(field.one if j == i else zero for j in range(dx + dy))
             for i in range(*blk)])
        if not rel.graph.intersect(cyl).is_zero():
            return False
    return True


def factorize(f):
    """Split f into reduction, a symplectomorphism of quotients, reduction back.

    f equals r_range^t o core o r_domain, where r_range reduces the target
    through range(f), r_domain reduces the source through domain(f), and
    the core relation is an isomorphism between the two reduced spaces.
    """
    rr = reduce_space(f.target, f.range())
    dr = reduce_space(f.source, f.domain())
    core = compose(compose(rr.relation, f), dr.relation.transpose())
    assert _is_iso_graph(core)
    inner = compose(core, dr.relation)
    assert transversality(core, dr.relation).transversal
    assert transversality(rr.relation.transpose(), inner).transversal
    assert compose(rr.relation.transpose(), inner) == f
    return Factorization(range_reduction=rr, domain_reduction=dr, core=core)


def compose_via_reduction(f, g):
    """Composition computed as a coisotropic reduction of f x g.

    The coisotropic is C = X x diag(Y) x Z inside X x bar(Y) x Y x bar(Z);
    its reduction is identified with X x bar(Z) through the section
    (x, z) -> (x, 0, 0, z), and the reduced image of f x g is the
    composition.  The identification is checked to be symplectic rather
    than trusted.
    """
    prod_sub, (dx, dy, dz) = _product_blocks(f, g)
    field = prod_sub.field
    big = product(product(f.target, bar(f.source)), product(g.target, bar(g.source)))
    c = _middle_diagonal(field, dx, dy, dz, with_ends=True)
    k = symp_orthogonal(big, c)
    assert k == _middle_diagonal(field, dx, dy, dz, with_ends=False)
    r = reduce_space(big, c)
    xz = product(f.target, bar(g.source))
    assert r.reduced.dim == xz.dim
    amb = dx + 2 * dy + dz
    zero = field.zero
    cols = []
    for i in range(dx + dz):
        w = [zero] * amb
        if i < dx:
            w[i] = field.one
        else:
            w[amb - dz + (i - dx)] = field.one
        cols.append(r.projection.apply(w))
    psi = Matrix.from_cols(field, cols, nrows=xz.dim)
    assert psi.transpose().mul(r.reduced.form).mul(psi) == xz.form
    psi_inv = psi.inverse()
    reduced_graph = reduce_lagrangian(r, prod_sub)
    rows = [psi_inv.apply(v) for v in reduced_graph.basis_vectors()]
    out = CanonicalRelation(f.target, g.source,
                            Subspace.span(field, dx + dz, rows))
    # the reduction is transversal exactly when the pair is
    assert transversality(f, g).transversal == prod_sub.sum(c).is_full()
    return out
