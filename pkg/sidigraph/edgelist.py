"""
Plain-text edge lists for signed digraphs::

    # C_2^+ joined to C_4^-
    n 6
    0 1 +1
    1 0 +1

The first non-comment line declares the vertex count; every other line is one
arc ``tail head sign`` with sign ``+1`` or ``-1``.
"""

import logging

from sidigraph.models import Arc, InvalidArgument, Sign, SignedDigraph, check_arc


log = logging.getLogger(__name__)


class EdgeListError(ValueError):

    def __init__(self, line_number, message):
        super().__init__('line %d: %s' % (line_number, message))
        self.line_number = line_number


def parse_edge_list(text):
    n_vertices = None
    arcs = []
    last_line = 0

    for line_number, line in enumerate(text.splitlines(), 1):
        last_line = line_number
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()

        if n_vertices is None:
            if len(fields) != 2 or fields[0] != 'n':
                raise EdgeListError(line_number, "expected 'n <vertex count>', got %r" % line)
            try:
                n_vertices = int(fields[1])
            except ValueError:
                raise EdgeListError(line_number, "vertex count %r is not an integer" % fields[1])
            if n_vertices < 1:
                raise EdgeListError(line_number, "vertex count must be positive, got %d" % n_vertices)
            continue

        if len(fields) != 3:
            raise EdgeListError(line_number, "expected 'tail head sign', got %r" % line)
        try:
            tail, head = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(line_number, "vertex ids must be integers, got %r" % line)
        if fields[2] not in ('+1', '-1', '1'):
            raise EdgeListError(line_number, "sign must be +1 or -1, got %r" % fields[2])
        arcs.append((line_number, Arc(tail, head, Sign.parse(fields[2]))))

    if n_vertices is None:
        raise EdgeListError(last_line or 1, "missing 'n <vertex count>' line")

    # Validate arc by arc so errors point at the offending line.
    seen = set()
    for line_number, arc in arcs:
        try:
            check_arc(n_vertices, arc.tail, arc.head, seen)
        except InvalidArgument as exc:
            raise EdgeListError(line_number, str(exc))

    log.debug("Parsed edge list with %d vertices and %d arcs", n_vertices, len(arcs))
    return SignedDigraph(n_vertices, tuple(arc for line_number, arc in arcs))


def load_edge_list(path):
    with open(path) as fh:
        return parse_edge_list(fh.read())


def dump_edge_list(g, comment=None):
    lines = []
    if comment:
        lines.append('# %s' % comment)
    lines.append('n %d' % g.n_vertices)
    for tail, head, sign in g.arcs:
        lines.append('%d %d %+d' % (tail, head, int(sign)))
    return '\n'.join(lines) + '\n'
