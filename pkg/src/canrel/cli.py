"""Command line front end over JSON documents.

A document fixes one field and names a collection of spaces, subspaces,
matrices, relations, sequences, tuples, and one-parameter families; each
command reads a document, resolves its positional arguments against
those names, and prints a single JSON result on stdout.  Scalars travel
as decimal integer strings or "a/b"; output is canonical and
byte-deterministic.  Exit codes: 0 success, 1 usage or malformed
document, 2 violated mathematical precondition, 3 unsupported request.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .linalg import (
    CanrelError,
    Fp,
    Matrix,
    QQ,
    RatFunc,
    Subspace,
    UnsupportedField,
    field_from_spec,
)
from .symplectic import (
    SymplecticSpace,
    bar,
    classify,
    enumerate_lagrangians,
    lagrangian_count,
    product,
    standard_space,
)
from .relations import (
    CanonicalRelation,
    compose,
    cotangent_lift,
    graph_of_symplectomorphism,
    identity_relation,
    liftlike_core,
    make_relation,
    transversality,
)
from .reduction import compose_via_reduction, factorize, reduce_lagrangian, reduce_space
from .closure import ParametricRelation, closure_limit_check, in_closure, sabot_compose
from .sequences import WWSequence, equivalent_bounded, greedy_reduce, rel_value
from .nerve import NerveTuple, check_simplicial_identities, degeneracy, face, is_completely_transversal


class DocumentError(CanrelError):
    """The document is structurally malformed."""


_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")
_INT_RE = re.compile(r"^-?\d+$")


def parse_scalar(field, s, where):
    if not isinstance(s, str):
        raise DocumentError("%s: scalar %r is not a string" % (where, s))
    if field.kind == "rational":
        if not _RATIONAL_RE.match(s):
            raise DocumentError("%s: bad rational scalar %r" % (where, s))
        return Fraction(s)
    if not _INT_RE.match(s):
        raise DocumentError("%s: bad integer scalar %r" % (where, s))
    return field.from_int(int(s))


def format_scalar(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Fp):
        return str(x.val)
    raise TypeError("no output form for scalar %r" % (x,))


def _parse_vector(field, v, n, where):
    if not isinstance(v, list) or len(v) != n:
        raise DocumentError("%s: expected a vector of length %d" % (where, n))
    return tuple(parse_scalar(field, x, where) for x in v)


def _parse_matrix(field, rows, where):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError("%s: expected a list of rows" % where)
    if rows:
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise DocumentError("%s: ragged rows" % where)
    return Matrix(field, [[parse_scalar(field, x, where) for x in r] for r in rows])


def _parse_ratfunc(entry, where):
    if isinstance(entry, str):
        if not _RATIONAL_RE.match(entry):
            raise DocumentError("%s: bad rational scalar %r" % (where, entry))
        return RatFunc((Fraction(entry),))
    if isinstance(entry, dict) and set(entry) <= {"num", "den"} and "num" in entry:
        def coeffs(key, default):
            val = entry.get(key, default)
            if not isinstance(val, list):
                raise DocumentError("%s: %s must be a coefficient list" % (where, key))
            out = []
            for c in val:
                if not isinstance(c, str) or not _RATIONAL_RE.match(c):
                    raise DocumentError("%s: bad coefficient %r" % (where, c))
                out.append(Fraction(c))
            return out
        return RatFunc(coeffs("num", None), coeffs("den", ["1"]))
    raise DocumentError("%s: family entries are scalar strings or {num, den}" % where)


class Document:
    __slots__ = ("field", "spaces", "subspaces", "matrices", "relations",
                 "sequences", "tuples", "families")

    def __init__(self):
        self.field = None
        self.spaces = {}
        self.subspaces = {}   # name -> (space name, Subspace)
        self.matrices = {}
        self.relations = {}   # name -> (target name, source name, CanonicalRelation)
        self.sequences = {}   # name -> (entry names or None, object name or None, WWSequence)
        self.tuples = {}      # name -> (space name, entry names, NerveTuple)
        self.families = {}    # name -> (target name, source name, ParametricRelation)


_SECTIONS = ("field", "spaces", "subspaces", "matrices", "relations",
             "sequences", "tuples", "families")


def _named(raw, section):
    if not isinstance(raw, dict):
        raise DocumentError("section %r must be an object" % section)
    return sorted(raw.items())


def parse_document(text):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError("invalid JSON: %s" % e)
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    for key in raw:
        if key not in _SECTIONS:
            raise DocumentError("unknown document section %r" % key)
    doc = Document()

    fld = raw.get("field")
    if not isinstance(fld, dict) or "kind" not in fld:
        raise DocumentError("document needs a field header {kind: ...}")
    try:
        doc.field = field_from_spec(fld.get("kind"), fld.get("p"))
    except UnsupportedField as e:
        raise DocumentError(str(e))
    field = doc.field

    for name, body in _named(raw.get("spaces", {}), "spaces"):
        where = "space %r" % name
        if not isinstance(body, dict):
            raise DocumentError("%s: expected an object" % where)
        try:
            if set(body) == {"n"}:
                doc.spaces[name] = standard_space(int(body["n"]), field)
            elif set(body) == {"dim", "form"}:
                m = _parse_matrix(field, body["form"], where)
                doc.spaces[name] = SymplecticSpace(field, int(body["dim"]), m)
            else:
                raise DocumentError("%s: give {n} or {dim, form}" % where)
        except CanrelError as e:
            raise type(e)("%s: %s" % (where, e))

    def space_of(name, where):
        if name not in doc.spaces:
            raise DocumentError("%s: unknown space %r" % (where, name))
        return doc.spaces[name]

    for name, body in _named(raw.get("subspaces", {}), "subspaces"):
        where = "subspace %r" % name
        if not isinstance(body, dict) or not {"space", "basis"} <= set(body) <= {"space", "basis", "dim"}:
            raise DocumentError("%s: give {space, basis}" % where)
        x = space_of(body["space"], where)
        try:
            vs = [_parse_vector(field, v, x.dim, where) for v in body["basis"]]
            sub = Subspace.span(field, x.dim, vs)
        except CanrelError as e:
            raise type(e)("%s: %s" % (where, e))
        if "dim" in body and body["dim"] != sub.dim:
            raise DocumentError("%s: stated dim %r, basis spans dim %d"
                                % (where, body["dim"], sub.dim))
        doc.subspaces[name] = (body["space"], sub)

    for name, body in _named(raw.get("matrices", {}), "matrices"):
        doc.matrices[name] = _parse_matrix(field, body, "matrix %r" % name)

    for name, body in _named(raw.get("relations", {}), "relations"):
        where = "relation %r" % name
        if not isinstance(body, dict) or set(body) != {"target", "source", "basis"}:
            raise DocumentError("%s: give {target, source, basis}" % where)
        tgt = space_of(body["target"], where)
        src = space_of(body["source"], where)
        try:
            vs = [_parse_vector(field, v, tgt.dim + src.dim, where) for v in body["basis"]]
            doc.relations[name] = (body["target"], body["source"],
                                   make_relation(tgt, src, vs))
        except CanrelError as e:
            raise type(e)("%s: %s" % (where, e))

    def relation_of(name, where):
        if name not in doc.relations:
            raise DocumentError("%s: unknown relation %r" % (where, name))
        return doc.relations[name][2]

    for name, body in _named(raw.get("sequences", {}), "sequences"):
        where = "sequence %r" % name
        try:
            if isinstance(body, list):
                if not body:
                    raise DocumentError("%s: empty sequences need {object, entries}" % where)
                rels = [relation_of(r, where) for r in body]
                doc.sequences[name] = (tuple(body), None, WWSequence(rels))
            elif isinstance(body, dict) and set(body) == {"object", "entries"}:
                obj = space_of(body["object"], where)
                rels = [relation_of(r, where) for r in body["entries"]]
                seq = WWSequence(rels) if rels else WWSequence.empty(obj)
                doc.sequences[name] = (tuple(body["entries"]), body["object"], seq)
            else:
                raise DocumentError("%s: give a relation list or {object, entries}" % where)
        except CanrelError as e:
            raise type(e)("%s: %s" % (where, e))

    for name, body in _named(raw.get("tuples", {}), "tuples"):
        where = "tuple %r" % name
        if not isinstance(body, dict) or set(body) != {"space", "entries"}:
            raise DocumentError("%s: give {space, entries}" % where)
        x = space_of(body["space"], where)
        try:
            rels = [relation_of(r, where) for r in body["entries"]]
            doc.tuples[name] = (body["space"], tuple(body["entries"]), NerveTuple(x, rels))
        except CanrelError as e:
            raise type(e)("%s: %s" % (where, e))

    for name, body in _named(raw.get("families", {}), "families"):
        where = "family %r" % name
        if not isinstance(body, dict) or set(body) != {"target", "source", "basis"}:
            raise DocumentError("%s: give {target, source, basis}" % where)
        tgt = space_of(body["target"], where)
        src = space_of(body["source"], where)
        amb = tgt.dim + src.dim
        cols = []
        for v in body["basis"]:
            if not isinstance(v, list) or len(v) != amb:
                raise DocumentError("%s: expected vectors of length %d" % (where, amb))
            cols.append(tuple(_parse_ratfunc(x, where) for x in v))
        try:
            doc.families[name] = (body["target"], body["source"],
                                  ParametricRelation(tgt, src, cols))
        except CanrelError as e:
            raise type(e)("%s: %s" % (where, e))

    return doc


# ---------------------------------------------------------------------------
# serialization


def matrix_json(m):
    return [[format_scalar(x) for x in r] for r in m.rows]


def subspace_json(s):
    return {"dim": s.dim, "basis": [[format_scalar(x) for x in v]
                                    for v in s.basis_vectors()]}


def space_json(x):
    return {"dim": x.dim, "form": matrix_json(x.form)}


def _space_ref(doc, x):
    for name, sp in doc.spaces.items():
        if sp == x:
            return name
    return space_json(x)


def relation_json(doc, f):
    out = {"target": _space_ref(doc, f.target), "source": _space_ref(doc, f.source)}
    out.update(subspace_json(f.graph))
    return out


def _ratfunc_json(f):
    if len(f.num) <= 1 and f.den == (Fraction(1),):
        return str(f.num[0]) if f.num else "0"
    return {"num": [str(c) for c in f.num], "den": [str(c) for c in f.den]}


def format_document(doc):
    out = {"field": {"kind": doc.field.kind}}
    if doc.field.kind == "prime":
        out["field"]["p"] = doc.field.p
    if doc.spaces:
        out["spaces"] = {n: space_json(x) for n, x in doc.spaces.items()}
    if doc.subspaces:
        out["subspaces"] = {n: {"space": sp, **subspace_json(s)}
                            for n, (sp, s) in doc.subspaces.items()}
    if doc.matrices:
        out["matrices"] = {n: matrix_json(m) for n, m in doc.matrices.items()}
    if doc.relations:
        out["relations"] = {n: {"target": t, "source": s, "basis": subspace_json(f.graph)["basis"]}
                            for n, (t, s, f) in doc.relations.items()}
    if doc.sequences:
        sec = {}
        for n, (names, obj, seq) in doc.sequences.items():
            if obj is None:
                sec[n] = list(names)
            else:
                sec[n] = {"object": obj, "entries": list(names)}
        out["sequences"] = sec
    if doc.tuples:
        out["tuples"] = {n: {"space": sp, "entries": list(names)}
                         for n, (sp, names, t) in doc.tuples.items()}
    if doc.families:
        out["families"] = {
            n: {"target": t, "source": s,
                "basis": [[_ratfunc_json(x) for x in col] for col in fam.family.cols]}
            for n, (t, s, fam) in doc.families.items()}
    return out


# ---------------------------------------------------------------------------
# commands


def _get(doc, section, name, kind):
    table = getattr(doc, section)
    if name not in table:
        raise DocumentError("unknown %s %r" % (kind, name))
    return table[name]


def _rel(doc, name):
    return _get(doc, "relations", name, "relation")[2]


def _sub(doc, name):
    return _get(doc, "subspaces", name, "subspace")


def _space(doc, name):
    if name not in doc.spaces:
        raise DocumentError("unknown space %r" % name)
    return doc.spaces[name]


def cmd_check(doc, args, opts):
    return format_document(doc)


def cmd_compose(doc, args, opts):
    f, g = _rel(doc, args[0]), _rel(doc, args[1])
    return relation_json(doc, compose(f, g))


def cmd_transversal(doc, args, opts):
    rep = transversality(_rel(doc, args[0]), _rel(doc, args[1]))
    return {"transversal": rep.transversal, "deficiency": rep.deficiency,
            "fiber_dim": rep.fiber_dim}


def cmd_deficiency(doc, args, opts):
    rep = transversality(_rel(doc, args[0]), _rel(doc, args[1]))
    return {"transversal": rep.transversal, "deficiency": rep.deficiency}


def cmd_transpose(doc, args, opts):
    return relation_json(doc, _rel(doc, args[0]).transpose())


def cmd_apply(doc, args, opts):
    f = _rel(doc, args[0])
    _, s = _sub(doc, args[1])
    return subspace_json(f.apply(s))


def cmd_graph(doc, args, opts):
    x = _space(doc, args[0])
    m = _get(doc, "matrices", args[1], "matrix")
    return relation_json(doc, graph_of_symplectomorphism(x, m))


def cmd_lift(doc, args, opts):
    m = _get(doc, "matrices", args[0], "matrix")
    return relation_json(doc, cotangent_lift(m, m.ncols, m.nrows))


def cmd_liftlike(doc, args, opts):
    f = _rel(doc, args[0])
    _, a = _sub(doc, args[1])
    _, b = _sub(doc, args[2])
    phi = liftlike_core(f, a, b)
    if phi is None:
        return {"liftlike": False}
    return {"liftlike": True, "core": matrix_json(phi)}


def _reduction_json(doc, r):
    return {
        "space": _space_ref(doc, r.ambient),
        "coisotropic": subspace_json(r.coisotropic),
        "kernel": subspace_json(r.kernel),
        "reduced": space_json(r.reduced),
        "projection": matrix_json(r.projection),
        "relation": relation_json(doc, r.relation),
    }


def cmd_reduce_space(doc, args, opts):
    sp_name, c = _sub(doc, args[0])
    return _reduction_json(doc, reduce_space(doc.spaces[sp_name], c))


def cmd_reduce_lagrangian(doc, args, opts):
    sp_name, c = _sub(doc, args[0])
    _, lag = _sub(doc, args[1])
    r = reduce_space(doc.spaces[sp_name], c)
    return subspace_json(reduce_lagrangian(r, lag))


def cmd_factorize(doc, args, opts):
    fac = factorize(_rel(doc, args[0]))
    return {"core": relation_json(doc, fac.core),
            "range_reduction": _reduction_json(doc, fac.range_reduction),
            "domain_reduction": _reduction_json(doc, fac.domain_reduction)}


def cmd_compose_via_reduction(doc, args, opts):
    f, g = _rel(doc, args[0]), _rel(doc, args[1])
    return relation_json(doc, compose_via_reduction(f, g))


def cmd_closure_member(doc, args, opts):
    t = in_closure(_rel(doc, args[0]), _rel(doc, args[1]), _rel(doc, args[2]))
    return {"member": t.member, "deficiency": t.deficiency, "codim": t.codim}


def cmd_sabot_compose(doc, args, opts):
    f, g = _rel(doc, args[0]), _rel(doc, args[1])
    members = sabot_compose(f, g)
    return {"target": _space_ref(doc, f.target), "source": _space_ref(doc, g.source),
            "count": len(members),
            "members": [subspace_json(h.graph)["basis"] for h in members]}


def cmd_closure_limit(doc, args, opts):
    ff = _get(doc, "families", args[0], "family")[2]
    gf = _get(doc, "families", args[1], "family")[2]
    rep = closure_limit_check(ff, gf)
    return {
        "f_limit": subspace_json(rep.f_limit.graph),
        "g_limit": subspace_json(rep.g_limit.graph),
        "limit_of_compositions": subspace_json(rep.limit_of_compositions.graph),
        "composition_of_limits": subspace_json(rep.composition_of_limits.graph),
        "member": rep.triple.member,
        "deficiency": rep.triple.deficiency,
        "codim": rep.triple.codim,
        "continuous": rep.continuous,
    }


def cmd_lag_enum(doc, args, opts):
    x = _space(doc, args[0])
    grass = enumerate_lagrangians(x)
    return {"count": len(grass.members),
            "members": [subspace_json(s)["basis"] for s in grass.members]}


def cmd_lag_count(doc, args, opts):
    x = _space(doc, args[0])
    grass = enumerate_lagrangians(x)
    count = len(grass.members)
    assert count == lagrangian_count(x.field.p, x.n)
    return {"count": count}


def _seq(doc, name):
    return _get(doc, "sequences", name, "sequence")[2]


def _sequence_json(doc, seq):
    if not seq.entries:
        return {"object": _space_ref(doc, seq.obj), "entries": []}
    return {"target": _space_ref(doc, seq.target),
            "source": _space_ref(doc, seq.source),
            "entries": [relation_json(doc, f) for f in seq.entries]}


def cmd_ww_reduce(doc, args, opts):
    return _sequence_json(doc, greedy_reduce(_seq(doc, args[0])))


def cmd_ww_value(doc, args, opts):
    return relation_json(doc, rel_value(_seq(doc, args[0])))


def cmd_ww_equiv(doc, args, opts):
    res = equivalent_bounded(_seq(doc, args[0]), _seq(doc, args[1]), opts.depth)
    out = {"status": res.status, "depth": opts.depth}
    if res.status == "equivalent":
        out["steps_from_first"] = [{"kind": s.kind, "position": s.position}
                                   for s in res.steps_from_first]
        out["steps_from_second"] = [{"kind": s.kind, "position": s.position}
                                    for s in res.steps_from_second]
    return out


def _tuple(doc, name):
    return _get(doc, "tuples", name, "tuple")[2]


def _tuple_json(doc, t):
    return {"space": _space_ref(doc, t.space),
            "entries": [subspace_json(f.graph)["basis"] for f in t.entries]}


def _index(args, i):
    try:
        return int(args[i])
    except ValueError:
        raise DocumentError("expected an integer index, got %r" % args[i])


def cmd_nerve_face(doc, args, opts):
    return _tuple_json(doc, face(_index(args, 1), _tuple(doc, args[0])))


def cmd_nerve_degeneracy(doc, args, opts):
    return _tuple_json(doc, degeneracy(_index(args, 1), _tuple(doc, args[0])))


def cmd_nerve_transversal(doc, args, opts):
    return {"completely_transversal": is_completely_transversal(_tuple(doc, args[0]))}


def cmd_nerve_identities(doc, args, opts):
    x = _space(doc, args[0])
    k = _index(args, 1)
    samples = _index(args, 2) if len(args) > 2 else 25
    rep = check_simplicial_identities(x, k, samples, seed=opts.seed)
    return {"k": rep.k, "samples": rep.samples, "seed": opts.seed,
            "instances": rep.instances,
            "failures": [list(f) for f in rep.failures]}


_COMMANDS = {
    "check": (cmd_check, 0, "validate the document and print it normalized"),
    "compose": (cmd_compose, 2, "compose two relations"),
    "transversal": (cmd_transversal, 2, "full transversality report for a pair"),
    "deficiency": (cmd_deficiency, 2, "deficiency of a pair"),
    "transpose": (cmd_transpose, 1, "transpose a relation"),
    "apply": (cmd_apply, 2, "image of a subspace under a relation"),
    "graph": (cmd_graph, 2, "graph of a symplectic matrix on a space"),
    "lift": (cmd_lift, 1, "cotangent lift of a linear map"),
    "liftlike": (cmd_liftlike, 3, "core map of a liftlike relation"),
    "reduce-space": (cmd_reduce_space, 1, "reduce a space through a coisotropic"),
    "reduce-lagrangian": (cmd_reduce_lagrangian, 2, "reduce a lagrangian through a coisotropic"),
    "factorize": (cmd_factorize, 1, "factor a relation through its reductions"),
    "compose-via-reduction": (cmd_compose_via_reduction, 2, "compose by reducing the product"),
    "closure-member": (cmd_closure_member, 3, "test the closure criterion"),
    "sabot-compose": (cmd_sabot_compose, 2, "all closure members of a pair"),
    "closure-limit": (cmd_closure_limit, 2, "limit analysis of a composable pair of families"),
    "lag-enum": (cmd_lag_enum, 1, "enumerate the lagrangian grassmannian"),
    "lag-count": (cmd_lag_count, 1, "count the lagrangian grassmannian"),
    "ww-reduce": (cmd_ww_reduce, 1, "greedy reduction of a sequence"),
    "ww-value": (cmd_ww_value, 1, "relation a sequence multiplies out to"),
    "ww-equiv": (cmd_ww_equiv, 2, "bounded search for a rewrite certificate"),
    "nerve-face": (cmd_nerve_face, 2, "face operator on a tuple"),
    "nerve-degeneracy": (cmd_nerve_degeneracy, 2, "degeneracy operator on a tuple"),
    "nerve-transversal": (cmd_nerve_transversal, 1, "complete transversality of a tuple"),
    "nerve-identities": (cmd_nerve_identities, 2, "verify simplicial identities on samples"),
}


def format_output(result):
    """Canonical byte-stable rendering: one compact JSON line."""
    return json.dumps(result, separators=(",", ":")) + "\n"


def _build_parser(require_doc):
    parser = argparse.ArgumentParser(
        prog="canrel",
        description="exact calculus of linear canonical relations")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("names", nargs="*",
                        help="names of document objects (plus integer indices)")
    if require_doc:
        parser.add_argument("--doc", required=True, help="path to a JSON document")
    parser.add_argument("--name", default=None, help="label for the result object")
    parser.add_argument("--depth", type=int, default=4, help="search depth for ww-equiv")
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    return parser


def _dispatch(doc, opts):
    """Run one command against a parsed document.

    Returns (result dict or None, exit code, diagnostic or None).
    """
    handler, arity, _ = _COMMANDS[opts.command]
    extra = 1 if opts.command == "nerve-identities" else 0
    if not arity <= len(opts.names) <= arity + extra:
        return None, 1, ("error: %s takes %d argument(s), got %d"
                         % (opts.command, arity, len(opts.names)))
    try:
        result = handler(doc, opts.names, opts)
    except DocumentError as e:
        return None, 1, "error: %s" % e
    except UnsupportedField as e:
        return None, 3, "error: %s" % e
    except IndexError as e:
        return None, 1, "error: %s" % e
    except CanrelError as e:
        return None, 2, "error: %s" % e
    if opts.name is not None:
        result = {"name": opts.name, **result}
    return result, 0, None


def run_command(doc, argv):
    """Dispatch argv (command, names, flags; no --doc) on a document.

    Returns (output text, exit code); diagnostics go to stderr.
    """
    parser = _build_parser(require_doc=False)
    try:
        opts = parser.parse_args(list(argv))
    except SystemExit as e:
        return "", (1 if e.code else 0)
    result, code, message = _dispatch(doc, opts)
    if message is not None:
        print(message, file=sys.stderr)
    return (format_output(result) if result is not None else ""), code


def main(argv=None):
    parser = _build_parser(require_doc=True)
    try:
        opts = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    try:
        with open(opts.doc) as fh:
            text = fh.read()
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    try:
        doc = parse_document(text)
    except DocumentError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except UnsupportedField as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except CanrelError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    result, code, message = _dispatch(doc, opts)
    if message is not None:
        print(message, file=sys.stderr)
    if result is not None:
        sys.stdout.write(format_output(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
