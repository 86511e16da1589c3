"""Tuples of endorelations as simplices.

A k-tuple of canonical relations from a space X to itself is a
k-simplex; faces drop an end entry or compose an adjacent pair, and
degeneracies insert the diagonal.  These operators satisfy the usual
simplicial identities even though inner faces compose without any
transversality hypothesis.  Complete transversality of a tuple is
transversality of the product of its entries to the multidiagonal, and
the completely transversal tuples are closed under all faces and
degeneracies.
"""

import random
from dataclasses import dataclass

from .linalg import ShapeMismatch, Subspace
from .relations import compose, identity_relation, random_relation
from .symplectic import SymplecticSpace


class NerveTuple:
    """A tuple of endorelations on one space; k = 0 is the empty tuple."""

    __slots__ = ("space", "entries")

    def __init__(self, space, entries):
        entries = tuple(entries)
        for f in entries:
            if f.target != space or f.source != space:
                raise ShapeMismatch("tuple entry is not an endorelation on the space")
        self.space = space
        self.entries = entries

    @property
    def k(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, NerveTuple):
            return NotImplemented
        return self.space == other.space and self.entries == other.entries

    def __hash__(self):
        return hash((self.space, self.entries))

    def __repr__(self):
        return "NerveTuple(k=%d, dim %d)" % (self.k, self.space.dim)


def face(i, t):
    """Face operator d_i: drop an end entry or compose an inner pair.

    d_0 removes the first entry, d_k the last; for 0 < i < k the pair
    (entry_i, entry_(i+1)) is replaced by its composition.
    """
    k = t.k
    if not 0 <= i <= k or k == 0:
        raise IndexError("face index %d out of range for a %d-tuple" % (i, k))
    if i == 0:
        return NerveTuple(t.space, t.entries[1:])
    if i == k:
        return NerveTuple(t.space, t.entries[:-1])
    merged = compose(t.entries[i - 1], t.entries[i])
    return NerveTuple(t.space, t.entries[: i - 1] + (merged,) + t.entries[i + 1:])


def degeneracy(i, t):
    """Degeneracy operator s_i: insert the diagonal at position i."""
    k = t.k
    if not 0 <= i <= k:
        raise IndexError("degeneracy index %d out of range for a %d-tuple" % (i, k))
    ident = identity_relation(t.space)
    return NerveTuple(t.space, t.entries[:i] + (ident,) + t.entries[i:])


def is_completely_transversal(t):
    """Is the entry product transversal to the multidiagonal?

    The product of the entry graphs sits inside (X x bar(X))^k; complete
    transversality asks that it spans the whole space together with
    X x diag(X)^(k-1) x bar(X).  Tuples of length at most one are
    completely transversal by convention.
    """
    k = t.k
    if k <= 1:
        return True
    d = t.space.dim
    amb = 2 * d * k
    field = t.space.field
    zero, one = field.zero, field.one
    rows = []
    for j, f in enumerate(t.entries):
        off = 2 * d * j
        for v in f.graph.basis_vectors():
            rows.append((zero,) * off + v + (zero,) * (amb - off - 2 * d))
    prod = Subspace.span(field, amb, rows)
    rows = []
    for i in range(d):  # free first block
        e = [zero] * amb
        e[i] = one
        rows.append(tuple(e))
    for j in range(1, k):  # diagonal linking block 2j-1 to block 2j
        for i in range(d):
            e = [zero] * amb
            e[(2 * j - 1) * d + i] = one
            e[2 * j * d + i] = one
            rows.append(tuple(e))
    for i in range(d):  # free last block
        e = [zero] * amb
        e[amb - d + i] = one
        rows.append(tuple(e))
    multidiag = Subspace.span(field, amb, rows)
    return prod.sum(multidiag).is_full()


def random_tuple(x, k, rng):
    """A k-tuple of random endorelations on x."""
    return NerveTuple(x, [random_relation(x, x, rng) for _ in range(k)])


@dataclass(frozen=True)
class SimplicialIdentityReport:
    space: SymplecticSpace
    k: int
    samples: int
    instances: int
    failures: tuple

    @property
    def ok(self):
        return not self.failures


def check_simplicial_identities(x, k, samples, seed=0):
    """Verify the simplicial identities on random k-tuples.

    Checks d_i d_j = d_(j-1) d_i for i < j, s_i s_j = s_(j+1) s_i for
    i <= j, and the three mixed d_i s_j rules, on `samples` random tuples
    drawn with the given seed.  Returns a report listing any violations
    (none are expected).
    """
    rng = random.Random(seed)
    instances = 0
    failures = []
    for trial in range(samples):
        t = random_tuple(x, k, rng)
        if k >= 2:
            for j in range(k + 1):
                for i in range(j):
                    if face(i, face(j, t)) != face(j - 1, face(i, t)):
                        failures.append(("dd", i, j, trial))
                    instances += 1
        for j in range(k + 1):
            for i in range(j + 1):
                if degeneracy(i, degeneracy(j, t)) != degeneracy(j + 1, degeneracy(i, t)):
                    failures.append(("ss", i, j, trial))
                instances += 1
        for j in range(k + 1):
            st = degeneracy(j, t)
            for i in range(k + 2):
                if i < j:
                    ok = face(i, st) == degeneracy(j - 1, face(i, t))
                elif i in (j, j + 1):
                    ok = face(i, st) == t
                else:
                    ok = face(i, st) == degeneracy(j, face(i - 1, t))
                if not ok:
                    failures.append(("ds", i, j, trial))
                instances += 1
    return SimplicialIdentityReport(space=x, k=k, samples=samples,
                                    instances=instances, failures=tuple(failures))
