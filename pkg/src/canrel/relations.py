"""Linear canonical relations and their composition calculus.

A canonical relation to X from Y is a lagrangian subspace of X x bar(Y),
target coordinates first.  Composition runs through the three-step recipe:
form the product relation, intersect with X x diag(Y) x Z, project to
X x Z.  For linear relations the outcome is always lagrangian and the
operation is associative, so no transversality hypothesis is needed to
compose; transversality only controls whether the intermediate
intersection is as small as possible.
"""

from dataclasses import dataclass

from .linalg import (
    CanrelError,
    FieldMismatch,
    Matrix,
    ShapeMismatch,
    Subspace,
    solve_columns,
)
from .symplectic import (
    NotSymplectic,
    SymplecticSpace,
    bar,
    classify,
    product,
    random_lagrangian,
    standard_space,
    symp_orthogonal,
)


class NotLagrangian(CanrelError):
    """A subspace that was required to be lagrangian is not."""


class CanonicalRelation:
    """A lagrangian subspace of target x bar(source), viewed as a morphism."""

    __slots__ = ("target", "source", "graph")

    def __init__(self, target, source, graph):
        if target.field != source.field or graph.field != target.field:
            raise FieldMismatch("relation pieces over different fields")
        amb = target.dim + source.dim
        if graph.ambient_dim != amb:
            raise ShapeMismatch("graph lives in ambient dimension %d, expected %d"
                                % (graph.ambient_dim, amb))
        if 2 * graph.dim != amb:
            raise NotLagrangian("graph of dimension %d in a %d-dimensional space"
                                % (graph.dim, amb))
        prod = product(target, bar(source))
        vs = graph.basis_vectors()
        for i, u in enumerate(vs):
            for v in vs[i:]:
                if prod.pairing(u, v):
                    raise NotLagrangian("graph is not isotropic for the difference form")
        self.target = target
        self.source = source
        self.graph = graph

    def product_space(self):
        return product(self.target, bar(self.source))

    def transpose(self):
        dx, dy = self.target.dim, self.source.dim
        flipped = [v[dx:] + v[:dx] for v in self.graph.basis_vectors()]
        return CanonicalRelation(
            self.source, self.target,
            Subspace.span(self.graph.field, dx + dy, flipped))

    def range(self):
        """Image of the projection to the target; always coisotropic."""
        dx = self.target.dim
        s = Subspace.span(self.graph.field, dx,
                          [v[:dx] for v in self.graph.basis_vectors()])
        assert classify(self.target, s).coisotropic
        return s

    def domain(self):
        """Image of the projection to the source; always coisotropic."""
        dx = self.target.dim
        s = Subspace.span(self.graph.field, self.source.dim,
                          [v[dx:] for v in self.graph.basis_vectors()])
        assert classify(self.source, s).coisotropic
        return s

    def apply(self, s):
        """Image f(S) of a subspace S of the source."""
        if s.ambient_dim != self.source.dim:
            raise ShapeMismatch("argument of ambient dimension %d, expected %d"
                                % (s.ambient_dim, self.source.dim))
        field = self.graph.field
        dx = self.target.dim
        zero = field.zero
        one = field.one
        rows = []
        for i in range(dx):
            rows.append(tuple(one if j == i else zero for j in range(dx))
                        + (zero,) * self.source.dim)
        for v in s.basis_vectors():
            rows.append((zero,) * dx + v)
        cylinder = Subspace.span(field, dx + self.source.dim, rows)
        hit = self.graph.intersect(cylinder)
        return Subspace.span(field, dx, [v[:dx] for v in hit.basis_vectors()])

    def __eq__(self, other):
        if not isinstance(other, CanonicalRelation):
            return NotImplemented
        return (self.target == other.target and self.source == other.source
                and self.graph == other.graph)

    def __hash__(self):
        return hash((self.target, self.source, self.graph))

    def __repr__(self):
        return "CanonicalRelation(dim %d -> dim %d, graph dim %d)" % (
            self.source.dim, self.target.dim, self.graph.dim)


def make_relation(target, source, vectors):
    """Canonicalize the spanning vectors and wrap them as a relation."""
    return CanonicalRelation(
        target, source,
        Subspace.span(target.field, target.dim + source.dim, vectors))


def identity_relation(x):
    """The diagonal of X x bar(X)."""
    field = x.field
    one, zero = field.one, field.zero
    rows = []
    for i in range(x.dim):
        e = tuple(one if j == i else zero for j in range(x.dim))
        rows.append(e + e)
    return CanonicalRelation(x, x, Subspace.span(field, 2 * x.dim, rows))


def _check_composable(f, g):
    if f.source != g.target:
        raise ShapeMismatch("cannot compose: source of the first relation "
                            "differs from target of the second")


def _product_blocks(f, g):
    """The product relation f x g inside X x bar(Y) x Y x bar(Z)."""
    field = f.graph.field
    dx, dy, dz = f.target.dim, f.source.dim, g.source.dim
    amb = dx + 2 * dy + dz
    zero = field.zero
    rows = [v + (zero,) * (dy + dz) for v in f.graph.basis_vectors()]
    rows += [(zero,) * (dx + dy) + v for v in g.graph.basis_vectors()]
    return Subspace.span(field, amb, rows), (dx, dy, dz)


def _middle_diagonal(field, dx, dy, dz, with_ends):
    """X x diag(Y) x Z  (or 0 x diag(Y) x 0 when with_ends is false)."""
    amb = dx + 2 * dy + dz
    one, zero = field.one, field.zero
    rows = []
    if with_ends:
        for i in range(dx):
            rows.append(tuple(one if j == i else zero for j in range(amb)))
    for i in range(dy):
        e = [zero] * amb
        e[dx + i] = one
        e[dx + dy + i] = one
        rows.append(tuple(e))
    if with_ends:
        for i in range(dz):
            rows.append(tuple(one if j == amb - dz + i else zero for j in range(amb)))
    return Subspace.span(field, amb, rows)


def compose(f, g):
    """f o g: projection of (f x g) cut down to the middle diagonal."""
    _check_composable(f, g)
    prod, (dx, dy, dz) = _product_blocks(f, g)
    mid = _middle_diagonal(prod.field, dx, dy, dz, with_ends=True)
    fiber = prod.intersect(mid)
    rows = [v[:dx] + v[dx + 2 * dy:] for v in fiber.basis_vectors()]
    return CanonicalRelation(f.target, g.source,
                             Subspace.span(prod.field, dx + dz, rows))


@dataclass(frozen=True)
class TransversalityReport:
    transversal: bool
    deficiency: int
    fiber_dim: int


def transversality(f, g):
    """Deficiency and fiber dimension of the pair (f, g).

    The deficiency is computed twice, as the dimension of
    (f x g) meet (0 x diag(Y) x 0) and as the codimension of
    domain(f) + range(g) in Y; the two must agree.
    """
    _check_composable(f, g)
    prod, (dx, dy, dz) = _product_blocks(f, g)
    kernel_part = prod.intersect(_middle_diagonal(prod.field, dx, dy, dz, with_ends=False))
    d = kernel_part.dim
    d2 = dy - f.domain().sum(g.range()).dim
    assert d == d2, "deficiency formulas disagree: %d vs %d" % (d, d2)
    fiber = prod.intersect(_middle_diagonal(prod.field, dx, dy, dz, with_ends=True))
    return TransversalityReport(transversal=(d == 0), deficiency=d,
                                fiber_dim=fiber.dim)


def graph_of_symplectomorphism(x, m):
    """The relation {(M v, v)} for a form-preserving matrix M on X."""
    if m.nrows != x.dim or m.ncols != x.dim:
        raise ShapeMismatch("matrix is %dx%d on a %d-dimensional space"
                            % (m.nrows, m.ncols, x.dim))
    if m.field != x.field:
        raise FieldMismatch("matrix over the wrong field")
    if m.transpose().mul(x.form).mul(m) != x.form:
        raise NotSymplectic("matrix does not preserve the form")
    field = x.field
    one, zero = field.one, field.zero
    rows = []
    for i in range(x.dim):
        e = tuple(one if j == i else zero for j in range(x.dim))
        rows.append(tuple(m.col(i)) + e)
    return CanonicalRelation(x, x, Subspace.span(field, 2 * x.dim, rows))


def lagrangian_as_relation(x, lag, direction):
    """View a lagrangian of X as a relation touching the point.

    direction "from_point" gives a relation to X from the point (a state);
    "to_point" gives a relation to the point from X (a costate).
    """
    if not classify(x, lag).lagrangian:
        raise NotLagrangian("subspace is not lagrangian in the given space")
    pt = standard_space(0, x.field)
    if direction == "from_point":
        return CanonicalRelation(x, pt, lag)
    if direction == "to_point":
        return CanonicalRelation(pt, x, lag)
    raise ValueError("direction must be 'from_point' or 'to_point'")


def cotangent_lift(m, a_dim, b_dim):
    """The lift {((a, M^T eta), (M a, eta))} to T*A from T*B of M: A -> B.

    T*A is the standard 2a-dimensional space, positions first.  Lifting is
    contravariant: compose(cotangent_lift(M), cotangent_lift(N)) equals the
    lift of the composite map "M then N", i.e. of the matrix product N M.
    """
    if m.nrows != b_dim or m.ncols != a_dim:
        raise ShapeMismatch("matrix is %dx%d, expected %dx%d"
                            % (m.nrows, m.ncols, b_dim, a_dim))
    field = m.field
    one, zero = field.one, field.zero
    rows = []
    for i in range(a_dim):
        e = tuple(one if j == i else zero for j in range(a_dim))
        rows.append(e + (zero,) * a_dim + tuple(m.col(i)) + (zero,) * b_dim)
    for j in range(b_dim):
        eps = tuple(one if i == j else zero for i in range(b_dim))
        rows.append((zero,) * a_dim + tuple(m.rows[j]) + (zero,) * b_dim + eps)
    return CanonicalRelation(
        standard_space(a_dim, field), standard_space(b_dim, field),
        Subspace.span(field, 2 * (a_dim + b_dim), rows))


def liftlike_core(f, a, b):
    """Extract the core map phi: A -> B of a liftlike relation.

    A and B are lagrangian subspaces of the target and source of f.  The
    relation is liftlike with respect to them when graph(f) meet (X x B)
    lies inside A x B and projects isomorphically onto A; phi is then the
    induced map, satisfying f(b) = phi^(-1)(b) for every b in B.  Returns
    the matrix of phi in the canonical bases of A and B, or None when the
    conditions fail.
    """
    if not classify(f.target, a).lagrangian:
        raise NotLagrangian("A is not lagrangian in the target")
    if not classify(f.source, b).lagrangian:
        raise NotLagrangian("B is not lagrangian in the source")
    field = f.graph.field
    dx, dy = f.target.dim, f.source.dim
    one, zero = field.one, field.zero
    rows = []
    for i in range(dx):
        rows.append(tuple(one if j == i else zero for j in range(dx)) + (zero,) * dy)
    for v in b.basis_vectors():
        rows.append((zero,) * dx + v)
    g = f.graph.intersect(Subspace.span(field, dx + dy, rows))
    ab = Subspace.span(field, dx + dy,
                       [v + (zero,) * dy for v in a.basis_vectors()]
                       + [(zero,) * dx + v for v in b.basis_vectors()])
    if not ab.contains(g):
        return None
    proj = Subspace.span(field, dx, [v[:dx] for v in g.basis_vectors()])
    if proj != a or g.dim != a.dim:
        return None
    cols = []
    g_x = [v[:dx] for v in g.basis_vectors()]
    g_y = [v[dx:] for v in g.basis_vectors()]
    for av in a.basis_vectors():
        w, _ = solve_columns(field, g_x, av)
        y = [zero] * dy
        for c, gv in zip(w, g_y):
            if c:
                for i, e in enumerate(gv):
                    if e:
                        y[i] = y[i] + c * e
        cols.append(_coords_in(b, y))
    phi = Matrix.from_cols(field, cols, nrows=b.dim)
    _check_core(f, a, b, phi)
    return phi


def _coords_in(s, v):
    """Coordinates of v in the canonical basis of s (v must lie in s)."""
    v = list(v)
    coords = []
    for row in s.basis_vectors():
        p = next(i for i, x in enumerate(row) if x)
        c = v[p]
        coords.append(c)
        if c:
            for i, x in enumerate(row):
                if x:
                    v[i] = v[i] - c * x
    assert not any(v), "vector outside the subspace"
    return tuple(coords)


def _check_core(f, a, b, phi):
    # f(b) = phi^(-1)(b) on each canonical basis vector of B, as an
    # equality of affine subsets of the target
    field = f.graph.field
    dx = f.target.dim
    g_cols = f.graph.basis_vectors()
    g_x = [v[:dx] for v in g_cols]
    g_y = [v[dx:] for v in g_cols]
    a_basis = a.basis_vectors()
    for j, bv in enumerate(b.basis_vectors()):
        part, ker = solve_columns(field, g_y, bv)
        phi_part, phi_ker = solve_columns(
            field, phi.cols(), tuple(field.one if i == j else field.zero
                                     for i in range(b.dim)))
        if part is None:
            assert phi_part is None
            continue
        assert phi_part is not None
        fiber_pt = _combine(g_x, part, dx, field)
        fiber_dirs = Subspace.span(field, dx,
                                   [_combine(g_x, w, dx, field) for w in ker])
        core_pt = _combine(a_basis, phi_part, dx, field)
        core_dirs = Subspace.span(field, dx,
                                  [_combine(a_basis, w, dx, field) for w in phi_ker])
        assert fiber_dirs == core_dirs
        diff = tuple(p - q for p, q in zip(fiber_pt, core_pt))
        assert fiber_dirs.contains_vector(diff)


def _combine(vectors, coeffs, n, field):
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, e in enumerate(v):
                if e:
                    out[i] = out[i] + c * e
    return tuple(out)


def random_relation(x, y, rng):
    """A uniformly scrambled canonical relation to x from y."""
    return CanonicalRelation(x, y, random_lagrangian(product(x, bar(y)), rng))
