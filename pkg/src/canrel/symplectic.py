"""Symplectic vector spaces over exact fields.

A space carries an explicit nondegenerate antisymmetric form; over a field
of characteristic 2 the diagonal is additionally required to vanish, which
is what the lagrangian theory needs there.  The zero-dimensional space (the
point) is an ordinary member of the family, not a special case.
"""

from dataclasses import dataclass
from itertools import product as iter_product

from .linalg import (
    CanrelError,
    FieldMismatch,
    Matrix,
    PrimeField,
    QQ,
    ShapeMismatch,
    Subspace,
    UnsupportedField,
    matrix_kernel,
)


class NotSymplectic(CanrelError):
    """A form or matrix fails to be symplectic."""


class EnumerationUnsupported(UnsupportedField):
    """Lagrangian enumeration asked for outside its supported range."""


class SymplecticSpace:
    __slots__ = ("field", "dim", "form")

    def __init__(self, field, dim, form):
        if dim % 2 != 0 or dim < 0:
            raise NotSymplectic("symplectic dimension must be even, got %d" % dim)
        if not isinstance(form, Matrix):
            form = Matrix(field, form, ncols=dim)
        if form.field != field:
            raise FieldMismatch("form over the wrong field")
        if form.nrows != dim or form.ncols != dim:
            raise NotSymplectic("form is %dx%d on a %d-dimensional space"
                                % (form.nrows, form.ncols, dim))
        for i in range(dim):
            if form.rows[i][i]:
                raise NotSymplectic("form has a nonzero diagonal entry")
            for j in range(i + 1, dim):
                if form.rows[i][j] != -form.rows[j][i]:
                    raise NotSymplectic("form is not antisymmetric")
        if dim and form.rank() != dim:
            raise NotSymplectic("form is degenerate")
        self.field = field
        self.dim = dim
        self.form = form

    @property
    def n(self):
        return self.dim // 2

    def pairing(self, u, v):
        """omega(u, v) for coordinate vectors u, v."""
        u = [self.field.coerce(x) for x in u]
        return _dot(u, self.form.apply(v), self.field)

    def __eq__(self, other):
        if not isinstance(other, SymplecticSpace):
            return NotImplemented
        return self.field == other.field and self.form == other.form

    def __hash__(self):
        return hash((self.field, self.form))

    def __repr__(self):
        return "SymplecticSpace(%r, dim=%d)" % (self.field, self.dim)


def _dot(u, v, field):
    s = field.zero
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def standard_space(n, field=QQ):
    """k^2n with omega(e_i, e_(n+j)) = delta_ij: block form [[0, I], [-I, 0]]."""
    one, zero = field.one, field.zero
    rows = []
    for i in range(n):
        rows.append([zero] * n + [one if j == i else zero for j in range(n)])
    for i in range(n):
        rows.append([-one if j == i else zero for j in range(n)] + [zero] * n)
    return SymplecticSpace(field, 2 * n, Matrix(field, rows, ncols=2 * n))


def bar(x):
    """The same space with the sign of the form reversed."""
    return SymplecticSpace(x.field, x.dim, -x.form)


def product(x, y):
    """Direct sum with the block-diagonal form."""
    if x.field != y.field:
        raise FieldMismatch("product of spaces over different fields")
    field = x.field
    zero = field.zero
    rows = []
    for r in x.form.rows:
        rows.append(list(r) + [zero] * y.dim)
    for r in y.form.rows:
        rows.append([zero] * x.dim + list(r))
    return SymplecticSpace(field, x.dim + y.dim, Matrix(field, rows, ncols=x.dim + y.dim))


def symp_orthogonal(x, s):
    """The omega-orthogonal of a subspace s inside x."""
    if s.ambient_dim != x.dim:
        raise ShapeMismatch("subspace of ambient dimension %d in a %d-dimensional space"
                            % (s.ambient_dim, x.dim))
    if s.field != x.field:
        raise FieldMismatch("subspace over the wrong field")
    if s.dim == 0:
        return Subspace.full(x.field, x.dim)
    # v is orthogonal to s iff (B^T Omega^T) v = 0 for a basis matrix B of s
    rows = [x.form.transpose().apply(b) for b in s.basis_vectors()]
    return matrix_kernel(Matrix(x.field, rows, ncols=x.dim))


@dataclass(frozen=True)
class IsotropyReport:
    isotropic: bool
    coisotropic: bool
    lagrangian: bool
    symplectic: bool


def classify(x, s):
    """Where s sits relative to its omega-orthogonal."""
    perp = symp_orthogonal(x, s)
    iso = perp.contains(s)
    coiso = s.contains(perp)
    return IsotropyReport(
        isotropic=iso,
        coisotropic=coiso,
        lagrangian=iso and coiso,
        symplectic=s.intersect(perp).is_zero(),
    )


@dataclass(frozen=True)
class LagGrassmannian:
    space: SymplecticSpace
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def lagrangian_count(p, n):
    """Number of lagrangian subspaces of a 2n-dimensional space over GF(p)."""
    c = 1
    for i in range(1, n + 1):
        c *= p**i + 1
    return c


def _subspace_vectors(field, s):
    """All nonzero vectors of a subspace over a prime field."""
    basis = s.basis_vectors()
    elems = [field.from_int(i) for i in range(field.p)]
    zero = field.zero
    for coeffs in iter_product(elems, repeat=len(basis)):
        if not any(coeffs):
            continue
        v = [zero] * s.ambient_dim
        for c, b in zip(coeffs, basis):
            if c:
                for i, x in enumerate(b):
                    if x:
                        v[i] = v[i] + c * x
        yield tuple(v)


_grassmannian_cache = {}


def enumerate_lagrangians(x, max_dim=6, max_p=7):
    """Every lagrangian subspace of x, canonical and sorted.

    Builds maximal isotropic subspaces by repeatedly adjoining vectors of
    the omega-orthogonal, deduplicating through the canonical form.  Only
    prime fields are supported, and the default bounds keep the search
    within dim <= 6, p <= 7.  Results are cached per space.
    """
    field = x.field
    if not isinstance(field, PrimeField):
        raise EnumerationUnsupported("lagrangian enumeration needs a finite field")
    if x.dim > max_dim or field.p > max_p:
        raise EnumerationUnsupported(
            "enumeration bound exceeded: dim %d (max %d), p %d (max %d)"
            % (x.dim, max_dim, field.p, max_p))
    cached = _grassmannian_cache.get(x)
    if cached is not None:
        return cached
    n = x.n
    zero_sub = Subspace.zero(field, x.dim)
    if n == 0:
        return _grassmannian_cache.setdefault(x, LagGrassmannian(x, (zero_sub,)))
    members = []
    seen = {zero_sub}
    stack = [zero_sub]
    while stack:
        s = stack.pop()
        if s.dim == n:
            members.append(s)
            continue
        perp = symp_orthogonal(x, s)
        for v in _subspace_vectors(field, perp):
            if s.contains_vector(v):
                continue
            t = Subspace.span(field, x.dim, s.basis_vectors() + (v,))
            if t not in seen:
                seen.add(t)
                stack.append(t)
    members.sort(key=Subspace.sort_key)
    for s in members:
        assert s.dim == n and classify(x, s).lagrangian
    return _grassmannian_cache.setdefault(x, LagGrassmannian(x, tuple(members)))


def random_lagrangian(x, rng):
    """A lagrangian subspace of x sampled by random isotropic extension."""
    field = x.field
    s = Subspace.zero(field, x.dim)
    while s.dim < x.n:
        perp = symp_orthogonal(x, s)
        basis = perp.basis_vectors()
        v = None
        for _ in range(64):
            if isinstance(field, PrimeField):
                coeffs = [field.from_int(rng.randrange(field.p)) for _ in basis]
            else:
                coeffs = [field.from_int(rng.randint(-3, 3)) for _ in basis]
            cand = [field.zero] * x.dim
            for c, b in zip(coeffs, basis):
                if c:
                    for i, e in enumerate(b):
                        if e:
                            cand[i] = cand[i] + c * e
            cand = tuple(cand)
            if any(cand) and not s.contains_vector(cand):
                v = cand
                break
        if v is None:
            # dim perp > dim s whenever s is isotropic of dim < n, so some
            # basis vector of perp lies outside s
            v = next(b for b in basis if not s.contains_vector(b))
        s = Subspace.span(field, x.dim, s.basis_vectors() + (v,))
    return s
