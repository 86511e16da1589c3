"""Shared builders for the test suite.

Everything here is a thin convenience over the public API: standard
spaces, the four product lagrangians of the 2-dimensional standard
space, scaling graphs, and random generators for subspaces with
prescribed isotropy.
"""

import random
import zlib
from fractions import Fraction

from hypothesis import HealthCheck, settings

from canrel import (
    GF,
    Matrix,
    QQ,
    Subspace,
    graph_of_symplectomorphism,
    make_relation,
    random_lagrangian,
    standard_space,
    symp_orthogonal,
)

settings.register_profile(
    "exact", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")


def std(n, field=QQ):
    return standard_space(n, field)


def scaling_matrix(field, a):
    a = field.coerce(a)
    return Matrix(field, [[a, field.zero], [field.zero, field.one / a]])


def gamma(a, field=QQ):
    """Graph of the scaling (q, p) -> (a q, p / a) on the standard plane."""
    return graph_of_symplectomorphism(std(1, field), scaling_matrix(field, a))


def lag1(field=QQ):
    return Subspace.span(field, 2, [(field.one, field.zero)])


def lag2(field=QQ):
    return Subspace.span(field, 2, [(field.zero, field.one)])


def product_relation(x, y, lag_x, lag_y):
    """The relation whose graph is lag_x x lag_y inside x x bar(y)."""
    field = x.field
    vs = []
    for v in lag_x.basis_vectors():
        vs.append(tuple(v) + (field.zero,) * y.dim)
    for w in lag_y.basis_vectors():
        vs.append((field.zero,) * x.dim + tuple(w))
    return make_relation(x, y, vs)


def four_corner_relations(field=QQ):
    """L1xL2, L2xL1, L1xL1, L2xL2 as endorelations of the standard plane."""
    x = std(1, field)
    l1, l2 = lag1(field), lag2(field)
    return (product_relation(x, x, l1, l2), product_relation(x, x, l2, l1),
            product_relation(x, x, l1, l1), product_relation(x, x, l2, l2))


def random_isotropic(x, rng):
    """A random isotropic subspace: a random slice of a random lagrangian."""
    lag = random_lagrangian(x, rng)
    basis = lag.basis_vectors()
    k = rng.randint(1, len(basis))
    picked = rng.sample(range(len(basis)), k)
    return Subspace.span(x.field, x.dim, [basis[i] for i in picked])


def random_coisotropic(x, rng):
    """A random coisotropic subspace, as the orthogonal of an isotropic."""
    return symp_orthogonal(x, random_isotropic(x, rng))


def rng_for(name):
    if isinstance(name, int):
        return random.Random(name)
    return random.Random(zlib.crc32(name.encode()))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance criterion at the end of the run."""
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if outcome == "passed" and getattr(rep, "when", "call") != "call":
                continue
            name = nodeid.split("::test_criterion_", 1)[1]
            num, _, rest = name.partition("_")
            label = rest.split("[", 1)[0].replace("_", " ")
            verdict = "PASS" if outcome == "passed" else "FAIL"
            # a failed setup and a failed call both count as FAIL
            if lines.get(num, (None, "PASS"))[1] == "FAIL":
                continue
            lines[num] = (label, verdict)
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num in sorted(lines):
            label, verdict = lines[num]
            terminalreporter.write_line(
                "criterion %s %s  (%s)" % (num, verdict, label))
