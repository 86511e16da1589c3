"""Multiple-valued composition through the closure criterion.

The set of triples (f, g, f o g) with f, g transversal is not closed:
along a family, the limit of the compositions can be strictly larger
than the composition of the limits.  The closure is cut out by the
criterion codim(h meet (f o g), f o g) <= deficiency(f, g), which this
module takes as the definition of membership over any exact field.
Sabot composition f * g collects every h passing the criterion; over a
finite field it is computed by filtering the lagrangian grassmannian.
"""

from dataclasses import dataclass

from .linalg import (
    Matrix,
    ParametricSubspace,
    QQ,
    QT,
    RatFunc,
    ShapeMismatch,
    Subspace,
    UnsupportedField,
    limit_subspace,
)
from .symplectic import SymplecticSpace, bar, enumerate_lagrangians, product
from .relations import CanonicalRelation, NotLagrangian, compose, transversality


@dataclass(frozen=True)
class ClosureTriple:
    f: CanonicalRelation
    g: CanonicalRelation
    h: CanonicalRelation
    member: bool
    deficiency: int
    codim: int


def in_closure(f, g, h):
    """Test h against the closure criterion for the pair (f, g)."""
    if h.target != f.target or h.source != g.source:
        raise ShapeMismatch("candidate relation joins the wrong spaces")
    k = compose(f, g)
    d = transversality(f, g).deficiency
    codim = k.graph.dim - h.graph.intersect(k.graph).dim
    return ClosureTriple(f=f, g=g, h=h, member=(codim <= d),
                         deficiency=d, codim=codim)


def sabot_compose(f, g, max_dim=6, max_p=7):
    """All relations h with codim(h meet (f o g)) <= deficiency(f, g).

    Finite fields only; the composition f o g itself is always a member,
    and it is the only one when the pair is transversal.
    """
    field = f.graph.field
    if field.kind != "prime":
        raise UnsupportedField("multiple-valued composition needs a finite field")
    k = compose(f, g)
    d = transversality(f, g).deficiency
    xz = product(f.target, bar(g.source))
    grass = enumerate_lagrangians(xz, max_dim=max_dim, max_p=max_p)
    members = []
    for lag in grass.members:
        codim = k.graph.dim - lag.intersect(k.graph).dim
        if codim <= d:
            members.append(CanonicalRelation(f.target, g.source, lag))
    return tuple(members)


def _to_function_field(x):
    """The same symplectic space with scalars extended to QQ(t)."""
    rows = [[QT.coerce(e) for e in r] for r in x.form.rows]
    return SymplecticSpace(QT, x.dim, Matrix(QT, rows, ncols=x.dim))


class ParametricRelation:
    """A family of canonical relations between fixed rational spaces.

    The graph is a grid of rational functions in t; it must be lagrangian
    over QQ(t), which makes it lagrangian for all but finitely many
    parameter values.
    """

    __slots__ = ("target", "source", "family", "at_t")

    def __init__(self, target, source, cols):
        if target.field != QQ or source.field != QQ:
            raise UnsupportedField("relation families need rational base spaces")
        amb = target.dim + source.dim
        family = ParametricSubspace(amb, cols)
        graph_t = Subspace.span(QT, amb, family.cols)
        # generic lagrangian-ness is exactly lagrangian-ness over QQ(t)
        self.at_t = CanonicalRelation(
            _to_function_field(target), _to_function_field(source), graph_t)
        self.target = target
        self.source = source
        self.family = family

    def limit(self):
        """The relation at t = 0, taken in the grassmannian."""
        return CanonicalRelation(self.target, self.source,
                                 limit_subspace(self.family))


@dataclass(frozen=True)
class ClosureLimitReport:
    f_limit: CanonicalRelation
    g_limit: CanonicalRelation
    limit_of_compositions: CanonicalRelation
    composition_of_limits: CanonicalRelation
    triple: ClosureTriple
    continuous: bool


def closure_limit_check(f_family, g_family):
    """Compose a pair of families generically, then pass to the limit.

    The limit h0 of the generic compositions is compared with the
    composition of the limits f0 o g0, and the triple (f0, g0, h0) is
    checked against the closure criterion; membership always holds.
    """
    if f_family.source != g_family.target:
        raise ShapeMismatch("families are not composable")
    generic = compose(f_family.at_t, g_family.at_t)
    amb = generic.target.dim + generic.source.dim
    h0_sub = limit_subspace(ParametricSubspace(amb, generic.graph.basis_vectors()))
    f0 = f_family.limit()
    g0 = g_family.limit()
    h0 = CanonicalRelation(f0.target, g0.source, h0_sub)
    triple = in_closure(f0, g0, h0)
    assert triple.member
    straight = compose(f0, g0)
    return ClosureLimitReport(
        f_limit=f0, g_limit=g0, limit_of_compositions=h0,
        composition_of_limits=straight, triple=triple,
        continuous=(h0 == straight))
