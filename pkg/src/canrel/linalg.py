"""Exact linear algebra over the rationals, prime fields, and rational functions.

Scalars are fractions.Fraction values, prime-field residues, or rational
functions in one formal variable t with Fraction coefficients.  Matrices and
subspaces work uniformly over all three; a subspace is stored in reduced
column echelon form (pivot entries 1, pivot rows otherwise zero, pivots
found top to bottom), so two equal subspaces have identical bases and
compare equal in O(1).

No floating point enters anywhere.
"""

from fractions import Fraction


class CanrelError(Exception):
    """Base for every error this package raises on bad input."""


class FieldMismatch(CanrelError):
    """Operands live over different fields."""


class ShapeMismatch(CanrelError):
    """Dimensions or ambient spaces do not line up."""


class UnsupportedField(CanrelError):
    """The operation is not defined over the given field."""


# ---------------------------------------------------------------------------
# scalars


class Fp:
    """A residue in the field of integers mod p."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _match(self, other):
        if other.p != self.p:
            raise FieldMismatch("residues mod %d and mod %d cannot mix"
                                % (self.p, other.p))

    def __add__(self, other):
        if not isinstance(other, Fp):
            return NotImplemented
        self._match(other)
        return Fp(self.val + other.val, self.p)

    def __sub__(self, other):
        if not isinstance(other, Fp):
            return NotImplemented
        self._match(other)
        return Fp(self.val - other.val, self.p)

    def __mul__(self, other):
        if not isinstance(other, Fp):
            return NotImplemented
        self._match(other)
        return Fp(self.val * other.val, self.p)

    def __truediv__(self, other):
        if not isinstance(other, Fp):
            return NotImplemented
        self._match(other)
        if other.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.val * pow(other.val, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if not isinstance(other, Fp):
            return NotImplemented
        return self.val == other.val and self.p == other.p

    def __hash__(self):
        return hash((self.val, self.p))

    def __repr__(self):
        return str(self.val)


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# Polynomials with Fraction coefficients, constant term first, no trailing
# zeros.  The zero polynomial is the empty tuple.

_F0 = Fraction(0)
_F1 = Fraction(1)


def _ptrim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim(
        (a[i] if i < len(a) else _F0) + (b[i] if i < len(b) else _F0)
        for i in range(n)
    )


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    # b nonzero
    q = [_F0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        if not r[-1]:
            r.pop()
            continue
        c = r[-1] / lead
        k = len(r) - len(b)
        q[k] = c
        for i, x in enumerate(b):
            r[i + k] -= c * x
        r.pop()
    return _ptrim(q), _ptrim(r)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(x / lead for x in a)  # monic
    return a


def _porder(a):
    # multiplicity of the root t = 0; None for the zero polynomial
    if not a:
        return None
    for i, x in enumerate(a):
        if x:
            return i
    return None


class RatFunc:
    """A rational function in t over the rationals, kept in lowest terms.

    The denominator is monic and shares no factor with the numerator, so
    representations are unique and equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(_F1,)):
        num = _ptrim(Fraction(x) for x in num)
        den = _ptrim(Fraction(x) for x in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (_F1,)
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            if lead != _F1:
                num = tuple(x / lead for x in num)
                den = tuple(x / lead for x in den)
        self.num = num
        self.den = den

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pneg(_pmul(other.num, self.den))),
            _pmul(self.den, other.den),
        )

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def order(self):
        """Order of vanishing at t = 0 (negative at a pole, None if zero)."""
        if not self.num:
            return None
        return _porder(self.num) - _porder(self.den)

    def eval0(self):
        """Value at t = 0; requires order() >= 0."""
        o = self.order()
        if o is None:
            return _F0
        if o < 0:
            raise ZeroDivisionError("pole at t = 0")
        # lowest terms and order >= 0 force den(0) != 0
        return self.num[0] / self.den[0] if self.num else _F0

    def __repr__(self):
        def side(c):
            if len(c) == 1:
                return str(c[0])
            terms = []
            for i, x in enumerate(c):
                if not x:
                    continue
                if i == 0:
                    terms.append(str(x))
                elif i == 1:
                    terms.append("%s*t" % x)
                else:
                    terms.append("%s*t^%d" % (x, i))
            return " + ".join(terms) if terms else "0"

        if self.den == (_F1,):
            return side(self.num)
        return "(%s)/(%s)" % (side(self.num), side(self.den))


def tpow(k):
    """The monomial t**k as a RatFunc; k may be negative."""
    if k >= 0:
        return RatFunc((_F0,) * k + (_F1,))
    return RatFunc((_F1,), (_F0,) * (-k) + (_F1,))


# ---------------------------------------------------------------------------
# fields


class RationalField:
    kind = "rational"
    zero = _F0
    one = _F1

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    def sort_key(self, x):
        return x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise UnsupportedField("%d is not prime" % p)
        self.p = p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def from_int(self, n):
        return Fp(n, self.p)

    def coerce(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch("residue mod %d used in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        raise TypeError("cannot coerce %r into GF(%d)" % (x, self.p))

    def sort_key(self, x):
        return x.val

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


_gf_cache = {}


def GF(p):
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


class FunctionField:
    """Rational functions in t over QQ.  Internal to limit computations."""

    kind = "function"
    zero = RatFunc(())
    one = RatFunc((_F1,))
    t = RatFunc((_F0, _F1))

    def from_int(self, n):
        return RatFunc((Fraction(n),))

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc((Fraction(x),))
        raise TypeError("cannot coerce %r into QQ(t)" % (x,))

    def sort_key(self, x):
        return (x.num, x.den)

    def __eq__(self, other):
        return isinstance(other, FunctionField)

    def __hash__(self):
        return hash("QQ(t)")

    def __repr__(self):
        return "QQ(t)"


QT = FunctionField()


def field_from_spec(kind, p=None):
    """Build the field named by a document header."""
    if kind == "rational":
        if p is not None:
            raise UnsupportedField("rational field takes no modulus")
        return QQ
    if kind == "prime":
        if p is None:
            raise UnsupportedField("prime field needs p")
        return GF(p)
    raise UnsupportedField("unknown field kind %r" % (kind,))


# ---------------------------------------------------------------------------
# matrices


def _rref(rows, field):
    """Row reduce in place; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != field.one:
            rows[r] = [x / pv if x else x for x in rows[r]]
        top = rows[r]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], top)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, tuple(pivots)


class Matrix:
    """Immutable dense matrix over one of the exact fields."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise ShapeMismatch("ragged matrix rows")
        elif ncols is None:
            ncols = 0
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_cols(cls, field, cols, nrows=None):
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], ncols=len(cols))

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self):
        if self.rows:
            return Matrix(self.field, zip(*self.rows), ncols=self.nrows)
        return Matrix(self.field, [()] * self.ncols, ncols=0)

    def mul(self, other):
        if self.field != other.field:
            raise FieldMismatch("matrix product across fields")
        if self.ncols != other.nrows:
            raise ShapeMismatch("matrix product %dx%d by %dx%d"
                                % (self.nrows, self.ncols, other.nrows, other.ncols))
        ocols = list(zip(*other.rows)) if other.rows else []
        zero = self.field.zero
        out = []
        for r in self.rows:
            row = []
            for c in ocols:
                s = zero
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(self.field, out, ncols=other.ncols)

    def apply(self, vec):
        """Matrix times column vector, as a tuple."""
        if len(vec) != self.ncols:
            raise ShapeMismatch("vector length %d for %d columns" % (len(vec), self.ncols))
        zero = self.field.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, vec):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ShapeMismatch("matrix sum shape mismatch")
        return Matrix(self.field,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __neg__(self):
        return Matrix(self.field, [[-x for x in r] for r in self.rows], ncols=self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def rank(self):
        return len(_rref(self.rows, self.field)[1])

    def inverse(self):
        if self.nrows != self.ncols:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)]
               for i, r in enumerate(self.rows)]
        red, pivots = _rref(aug, self.field)
        if pivots != tuple(range(n)):
            raise ShapeMismatch("matrix is singular")
        return Matrix(self.field, [r[n:] for r in red], ncols=n)

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return "Matrix(%r, %r)" % (self.field, [list(r) for r in self.rows])


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A linear subspace held by its reduced column echelon basis."""

    __slots__ = ("field", "ambient_dim", "_rows")

    def __init__(self, field, ambient_dim, rows, _canonical=False):
        if not _canonical:
            raise TypeError("use Subspace.span")
        self.field = field
        self.ambient_dim = ambient_dim
        self._rows = rows

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        vs = []
        for v in vectors:
            v = tuple(field.coerce(x) for x in v)
            if len(v) != ambient_dim:
                raise ShapeMismatch("vector of length %d in ambient dimension %d"
                                    % (len(v), ambient_dim))
            vs.append(v)
        red, pivots = _rref(vs, field)
        rows = tuple(tuple(r) for r in red[: len(pivots)])
        return cls(field, ambient_dim, rows, _canonical=True)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, (), _canonical=True)

    @classmethod
    def full(cls, field, ambient_dim):
        one, zero = field.one, field.zero
        rows = tuple(tuple(one if i == j else zero for j in range(ambient_dim))
                     for i in range(ambient_dim))
        return cls(field, ambient_dim, rows, _canonical=True)

    @property
    def dim(self):
        return len(self._rows)

    @property
    def basis(self):
        """Basis as a matrix whose columns span the subspace."""
        return Matrix.from_cols(self.field, list(self._rows), nrows=self.ambient_dim)

    def basis_vectors(self):
        return self._rows

    def is_full(self):
        return self.dim == self.ambient_dim

    def is_zero(self):
        return self.dim == 0

    def _reduce(self, v):
        v = list(v)
        for row in self._rows:
            # pivot of a canonical row is its first nonzero entry, which is 1
            p = next(i for i, x in enumerate(row) if x)
            c = v[p]
            if c:
                for i, x in enumerate(row):
                    if x:
                        v[i] = v[i] - c * x
        return v

    def contains_vector(self, v):
        if len(v) != self.ambient_dim:
            raise ShapeMismatch("vector length %d in ambient dimension %d"
                                % (len(v), self.ambient_dim))
        return not any(self._reduce([self.field.coerce(x) for x in v]))

    def contains(self, other):
        self._check_compatible(other)
        return all(self.contains_vector(v) for v in other._rows)

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise ShapeMismatch("subspaces of ambient dimensions %d and %d"
                                % (self.ambient_dim, other.ambient_dim))

    def sum(self, other):
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self._rows + other._rows)

    def intersect(self, other):
        self._check_compatible(other)
        a, b = self._rows, other._rows
        if not a or not b:
            return Subspace.zero(self.field, self.ambient_dim)
        # kernel of the map (x, y) -> sum x_i a_i - sum y_j b_j
        stacked = [[v[i] for v in a] + [-v[i] for v in b] for i in range(self.ambient_dim)]
        zero = self.field.zero
        out = []
        for w in _kernel_rows(stacked, self.field):
            vec = [zero] * self.ambient_dim
            for c, v in zip(w[: len(a)], a):
                if c:
                    for i, x in enumerate(v):
                        if x:
                            vec[i] = vec[i] + c * x
            out.append(vec)
        return Subspace.span(self.field, self.ambient_dim, out)

    def sort_key(self):
        key = self.field.sort_key
        return (self.dim, tuple(key(x) for row in self._rows for x in row))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self._rows))

    def __repr__(self):
        return "Subspace(%r, dim=%d of %d)" % (self.field, self.dim, self.ambient_dim)


def _kernel_rows(rows, field):
    """Kernel basis (list of tuples) of the matrix given by rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = _rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    one, zero = field.one, field.zero
    out = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            if red[r][fc]:
                v[pc] = -red[r][fc]
        out.append(tuple(v))
    return out


def canonicalize(field, ambient_dim, vectors):
    """Canonical subspace spanned by the given vectors."""
    return Subspace.span(field, ambient_dim, vectors)


def subspace_sum(a, b):
    return a.sum(b)


def subspace_intersect(a, b):
    return a.intersect(b)


def matrix_kernel(m):
    """Kernel of a matrix as a canonical subspace of k^ncols."""
    if m.nrows == 0:
        return Subspace.full(m.field, m.ncols)
    return Subspace.span(m.field, m.ncols, _kernel_rows([list(r) for r in m.rows], m.field))


def solve_columns(field, cols, target):
    """Solve sum c_j cols[j] = target.

    Returns (particular, kernel) where particular is a coefficient tuple or
    None if the system is inconsistent, and kernel lists coefficient vectors
    spanning the solutions of the homogeneous system.
    """
    cols = [[field.coerce(x) for x in c] for c in cols]
    target = [field.coerce(x) for x in target]
    k = len(cols)
    n = len(target)
    rows = [[c[i] for c in cols] + [target[i]] for i in range(n)]
    red, pivots = _rref(rows, field)
    kernel = []
    zero = field.zero
    one = field.one
    if k in pivots:
        part = None
    else:
        part = [zero] * k
        for r, pc in enumerate(pivots):
            part[pc] = red[r][k]
        part = tuple(part)
    free = [c for c in range(k) if c not in pivots]
    for fc in free:
        v = [zero] * k
        v[fc] = one
        for r, pc in enumerate(pivots):
            if red[r][fc]:
                v[pc] = -red[r][fc]
        kernel.append(tuple(v))
    return part, kernel


def quotient_with_section(sub, of):
    """Coordinates on of/sub plus a section picking basis lifts.

    Returns (q, section): q is a matrix whose restriction to `of` is onto
    k^(dim of - dim sub) with kernel exactly `sub`; the columns of section
    are the complement vectors q maps to the standard basis.  The complement
    is chosen deterministically: the first echelon basis vectors of `of`
    that extend `sub`, then (for the ambient completion) the first standard
    basis vectors that extend `of`.
    """
    sub._check_compatible(of)
    if not of.contains(sub):
        raise ShapeMismatch("quotient of a space by a non-subspace")
    field = sub.field
    n = sub.ambient_dim
    acc = sub
    comp = []
    for v in of.basis_vectors():
        if not acc.contains_vector(v):
            comp.append(v)
            acc = acc.sum(Subspace.span(field, n, [v]))
    ext = []
    acc2 = of
    one, zero = field.one, field.zero
    for i in range(n):
        if acc2.dim == n:
            break
        e = tuple(one if j == i else zero for j in range(n))
        if not acc2.contains_vector(e):
            ext.append(e)
            acc2 = acc2.sum(Subspace.span(field, n, [e]))
    cols = list(sub.basis_vectors()) + comp + ext
    p = Matrix.from_cols(field, cols, nrows=n)
    pinv = p.inverse()
    m = len(comp)
    q = Matrix(field, pinv.rows[sub.dim: sub.dim + m], ncols=n)
    section = Matrix.from_cols(field, comp, nrows=n)
    return q, section


def quotient_coords(sub, of):
    """A surjection of `of` onto coordinates for of/sub, kernel sub."""
    return quotient_with_section(sub, of)[0]


# ---------------------------------------------------------------------------
# one-parameter families and their limits


class ParametricSubspace:
    """A family of subspaces of QQ^n given by columns of rational functions.

    The columns must be independent over QQ(t), so the family has constant
    dimension away from finitely many parameter values.
    """

    __slots__ = ("ambient_dim", "cols")

    def __init__(self, ambient_dim, cols):
        cols = tuple(tuple(QT.coerce(x) for x in c) for c in cols)
        for c in cols:
            if len(c) != ambient_dim:
                raise ShapeMismatch("family column of length %d in ambient dimension %d"
                                    % (len(c), ambient_dim))
        if cols:
            _, pivots = _rref([list(c) for c in cols], QT)
            if len(pivots) != len(cols):
                raise ShapeMismatch("family columns dependent over QQ(t)")
        self.ambient_dim = ambient_dim
        self.cols = cols

    @property
    def dim(self):
        return len(self.cols)

    def at(self, value):
        """Evaluate the family at a rational parameter value (no pole there)."""
        value = Fraction(value)
        vecs = []
        for c in self.cols:
            vec = []
            for f in c:
                num = sum(x * value ** i for i, x in enumerate(f.num))
                den = sum(x * value ** i for i, x in enumerate(f.den))
                if not den:
                    raise ZeroDivisionError("pole at t = %s" % value)
                vec.append(num / den)
            vecs.append(vec)
        return Subspace.span(QQ, self.ambient_dim, vecs)


def limit_subspace(family):
    """Limit of the family at t = 0 in the grassmannian.

    Repeatedly clears the lowest t-power from each column and evaluates at
    t = 0; while the evaluated columns are dependent, a dependent
    combination is divided by t and the loop resumes.  The total t-order of
    a maximal minor drops each round, so this terminates, and the result
    has the same dimension as the family.
    """
    n = family.ambient_dim
    if family.dim == 0:
        return Subspace.zero(QQ, n)
    cols = [list(c) for c in family.cols]
    while True:
        evaluated = []
        for idx, c in enumerate(cols):
            m = min(f.order() for f in c if f)
            if m != 0:
                shift = tpow(-m)
                c = [f * shift for f in c]
                cols[idx] = c
            evaluated.append(tuple(f.eval0() for f in c))
        stacked = [[v[i] for v in evaluated] for i in range(n)]
        ker = _kernel_rows(stacked, QQ)
        if not ker:
            limit = Subspace.span(QQ, n, evaluated)
            assert limit.dim == family.dim
            return limit
        lam = ker[0]
        j = next(i for i, x in enumerate(lam) if x)
        combo = [QT.zero] * n
        for coef, c in zip(lam, cols):
            if coef:
                lifted = QT.coerce(coef)
                for i, f in enumerate(c):
                    if f:
                        combo[i] = combo[i] + lifted * f
        cols[j] = combo
