from dataclasses import dataclass
import enum
from typing import NamedTuple, Tuple


class InvalidArgument(ValueError):
    pass


class Sign(enum.IntEnum):

    NEGATIVE = -1
    POSITIVE = 1

    @property
    def symbol(self):
        return '+' if self is Sign.POSITIVE else '-'

    @classmethod
    def parse(cls, text):
        text = str(text).strip()
        if text in ('+', '+1', '1'):
            return cls.POSITIVE
        if text in ('-', '-1'):
            return cls.NEGATIVE
        raise InvalidArgument("Sign must be one of +, -, +1, -1, not %r" % text)


class SignClass(str, enum.Enum):

    SAME = 'same_sign'
    MIXED = 'mixed_sign'
    ANY = 'any'


class Arc(NamedTuple):

    tail: int
    head: int
    sign: Sign


def check_arc(n_vertices, tail, head, seen):
    """Reject an arc outside the vertex range, a self-loop, or one already in ``seen``; then record it."""
    if not (0 <= tail < n_vertices and 0 <= head < n_vertices):
        raise InvalidArgument("Arc %d->%d leaves the vertex range [0, %d)" % (tail, head, n_vertices))
    if tail == head:
        raise InvalidArgument("Self-loop at vertex %d" % tail)
    if (tail, head) in seen:
        raise InvalidArgument("Duplicate arc %d->%d" % (tail, head))
    seen.add((tail, head))


@dataclass(frozen=True)
class SignedDigraph:

    n_vertices: int
    arcs: Tuple[Arc, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n_vertices, int) or self.n_vertices < 1:
            raise InvalidArgument("A signed digraph needs at least one vertex, not %r" % (self.n_vertices,))

        arcs = []
        seen = set()
        for tail, head, sign in self.arcs:
            check_arc(self.n_vertices, tail, head, seen)
            arcs.append(Arc(tail, head, Sign(sign)))

        # Sorted arcs make equal graphs compare and serialize identically.
        object.__setattr__(self, 'arcs', tuple(sorted(arcs)))

    def successors(self, vertex):
        return [arc.head for arc in self.arcs if arc.tail == vertex]

    def induced(self, vertices):
        """Return the subdigraph induced on `vertices`, relabelled densely in ascending order."""
        order = sorted(vertices)
        index = dict((vertex, i) for i, vertex in enumerate(order))
        arcs = [Arc(index[arc.tail], index[arc.head], arc.sign)
                for arc in self.arcs if arc.tail in index and arc.head in index]
        return SignedDigraph(len(order), tuple(arcs))


@dataclass(frozen=True)
class SignedCycle:

    length: int
    sign: Sign = Sign.POSITIVE

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 2:
            raise InvalidArgument("A directed cycle needs length >= 2, not %r" % (self.length,))
        object.__setattr__(self, 'sign', Sign(self.sign))

    @property
    def key(self):
        # Length ascending, then - before +.
        return (self.length, int(self.sign))

    @property
    def label(self):
        return 'C%d%s' % (self.length, self.sign.symbol)

    def __str__(self):
        return self.label


def _as_cycle(spec):
    if isinstance(spec, SignedCycle):
        return spec
    length, sign = spec
    if isinstance(sign, str):
        sign = Sign.parse(sign)
    return SignedCycle(length, sign)


@dataclass(frozen=True)
class CyclePair:

    c1: SignedCycle
    c2: SignedCycle
    budget_n: int

    def __post_init__(self):
        if self.budget_n < 4:
            raise InvalidArgument("Cycle pairs need a budget of at least 4 vertices, not %r" % (self.budget_n,))
        for cycle in (self.c1, self.c2):
            if cycle.length % 2:
                raise InvalidArgument("Cycle pairs hold even cycles only, not %s" % cycle)
            if cycle.length > self.budget_n - 2:
                raise InvalidArgument("%s does not fit a budget of %d" % (cycle, self.budget_n))
        if self.c1.length + self.c2.length > self.budget_n:
            raise InvalidArgument("%s and %s need more than %d vertices" % (self.c1, self.c2, self.budget_n))

        if self.c2.key < self.c1.key:
            c1, c2 = self.c2, self.c1
            object.__setattr__(self, 'c1', c1)
            object.__setattr__(self, 'c2', c2)

    @classmethod
    def of(cls, first, second, budget_n):
        """Build a pair from ``(length, sign)`` tuples or SignedCycles."""
        return cls(_as_cycle(first), _as_cycle(second), budget_n)

    @property
    def total(self):
        return self.c1.length + self.c2.length

    @property
    def sign_class(self):
        return SignClass.SAME if self.c1.sign == self.c2.sign else SignClass.MIXED

    @property
    def sign_rank(self):
        """(-,-) < (+,-) < (+,+)."""
        return (int(self.c1.sign) + int(self.c2.sign)) // 2 + 1

    @property
    def is_floating(self):
        if self.sign_class is not SignClass.MIXED:
            return False
        negative, positive = self.display_cycles()
        return positive.length == 2 and negative.length >= 4

    def display_cycles(self):
        # Mixed pairs read negative cycle first, as the orderings are written.
        if self.sign_class is SignClass.MIXED and self.c1.sign is Sign.POSITIVE:
            return self.c2, self.c1
        return self.c1, self.c2

    @property
    def label(self):
        return '(%s,%s)' % tuple(c.label for c in self.display_cycles())

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class VerificationReport:

    check: str
    budget_n: int
    passed: bool
    detail: str = ''
    case: str = ''

    def __str__(self):
        status = 'ok' if self.passed else 'FAIL'
        text = '%-4s %s n=%d' % (status, self.check, self.budget_n)
        if self.case:
            text += ' [%s]' % self.case
        if self.detail:
            text += ': %s' % self.detail
        return text
