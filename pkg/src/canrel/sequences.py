"""Formal composable sequences of canonical relations.

A sequence is either empty (and then carries the object it sits at) or a
chain of relations whose sources and targets match up.  Sequences form
the morphisms of a free category; actual composition of adjacent entries
is only performed when the pair is transversal, which together with
dropping and inserting identities generates the rewrite relation that
equivalence search explores.
"""

from dataclasses import dataclass

from .linalg import ShapeMismatch
from .relations import compose, identity_relation, transversality


class WWSequence:
    """A composable chain of relations, or an empty chain at an object."""

    __slots__ = ("entries", "obj")

    def __init__(self, entries, obj=None):
        entries = tuple(entries)
        if entries:
            if obj is not None:
                raise ShapeMismatch("nonempty sequences carry no separate object")
            for a, b in zip(entries, entries[1:]):
                if a.source != b.target:
                    raise ShapeMismatch("sequence entries do not chain")
        elif obj is None:
            raise ShapeMismatch("an empty sequence needs its object")
        self.entries = entries
        self.obj = obj

    @classmethod
    def empty(cls, x):
        return cls((), obj=x)

    @property
    def target(self):
        return self.entries[0].target if self.entries else self.obj

    @property
    def source(self):
        return self.entries[-1].source if self.entries else self.obj

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, WWSequence):
            return NotImplemented
        return self.entries == other.entries and self.obj == other.obj

    def __hash__(self):
        return hash((self.entries, self.obj))

    def __repr__(self):
        if not self.entries:
            return "WWSequence(empty at dim %d)" % self.obj.dim
        return "WWSequence(%d entries)" % len(self.entries)


def concat(s1, s2):
    """Concatenation; the inner boundary objects must agree."""
    if s1.source != s2.target:
        raise ShapeMismatch("concatenation boundary mismatch")
    if not s1.entries and not s2.entries:
        return WWSequence.empty(s1.obj)
    return WWSequence(s1.entries + s2.entries)


def _is_identity(rel):
    return rel.target == rel.source and rel == identity_relation(rel.target)


def rel_value(s):
    """The relation the sequence multiplies out to."""
    if not s.entries:
        return identity_relation(s.obj)
    out = s.entries[0]
    for f in s.entries[1:]:
        out = compose(out, f)
    return out


def greedy_reduce(s):
    """Shrink a sequence by leftmost identity drops and transversal merges.

    Repeats until neither move applies: drop the leftmost identity entry,
    otherwise compose the leftmost adjacent pair with deficiency zero.
    The result has the same rel_value and the same outer objects.
    """
    tgt = s.target
    entries = list(s.entries)
    while True:
        for i, f in enumerate(entries):
            if _is_identity(f):
                del entries[i]
                break
        else:
            for i in range(len(entries) - 1):
                if transversality(entries[i], entries[i + 1]).transversal:
                    entries[i: i + 2] = [compose(entries[i], entries[i + 1])]
                    break
            else:
                break
            continue
        continue
    if not entries:
        return WWSequence.empty(tgt)
    return WWSequence(entries)


@dataclass(frozen=True)
class RewriteStep:
    kind: str  # compose_pair | drop_identity | insert_identity
    position: int


def _boundary_object(s, i):
    """The object sitting at boundary i of the sequence (0 = outer target)."""
    if not s.entries:
        return s.obj
    if i == 0:
        return s.entries[0].target
    return s.entries[i - 1].source


def successors(s):
    """Every sequence reachable in one rewrite step, with its step label."""
    out = []
    for i, f in enumerate(s.entries):
        if _is_identity(f):
            rest = s.entries[:i] + s.entries[i + 1:]
            nxt = WWSequence(rest) if rest else WWSequence.empty(s.target)
            out.append((RewriteStep("drop_identity", i), nxt))
    for i in range(len(s.entries) - 1):
        if transversality(s.entries[i], s.entries[i + 1]).transversal:
            merged = (s.entries[:i]
                      + (compose(s.entries[i], s.entries[i + 1]),)
                      + s.entries[i + 2:])
            out.append((RewriteStep("compose_pair", i), WWSequence(merged)))
    for i in range(len(s.entries) + 1):
        ident = identity_relation(_boundary_object(s, i))
        widened = s.entries[:i] + (ident,) + s.entries[i:]
        out.append((RewriteStep("insert_identity", i), WWSequence(widened)))
    return out


@dataclass(frozen=True)
class EquivalenceResult:
    status: str  # "equivalent" | "unknown"
    steps_from_first: tuple = ()
    steps_from_second: tuple = ()
    meeting: WWSequence = None


def equivalent_bounded(s1, s2, depth):
    """Search for a rewrite certificate joining the two sequences.

    Breadth-first from both ends; "equivalent" comes with chains of steps
    from each side to a common sequence, of combined length at most
    depth.  "unknown" is not a proof of inequivalence, only of exhausted
    budget.
    """
    if s1.target != s2.target or s1.source != s2.source:
        raise ShapeMismatch("sequences join different objects")
    reached1 = _levels(s1, depth)
    reached2 = _levels(s2, depth)
    best = None
    for seq, (i, chain1) in reached1.items():
        hit = reached2.get(seq)
        if hit is None:
            continue
        j, chain2 = hit
        if i + j <= depth and (best is None or i + j < best[0]):
            best = (i + j, chain1, chain2, seq)
    if best is None:
        return EquivalenceResult(status="unknown")
    return EquivalenceResult(status="equivalent",
                             steps_from_first=tuple(best[1]),
                             steps_from_second=tuple(best[2]),
                             meeting=best[3])


def _levels(start, depth):
    """Shortest rewrite chains from start, breadth-first up to depth."""
    reached = {start: (0, [])}
    frontier = [start]
    for level in range(1, depth + 1):
        nxt = []
        for s in frontier:
            chain = reached[s][1]
            for step, t in successors(s):
                if t not in reached:
                    reached[t] = (level, chain + [step])
                    nxt.append(t)
        frontier = nxt
    return reached
