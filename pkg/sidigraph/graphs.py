import networkx as nx
import numpy as np

from sidigraph.models import Arc, InvalidArgument, Sign, SignedCycle, SignedDigraph


def make_cycle(length, sign=Sign.POSITIVE):
    if length < 2:
        raise InvalidArgument("A directed cycle needs length >= 2, not %r" % (length,))
    sign = Sign(sign)

    arcs = [Arc(i, i + 1, Sign.POSITIVE) for i in range(length - 1)]
    # Only the closing arc carries the cycle's sign.
    arcs.append(Arc(length - 1, 0, sign))
    return SignedDigraph(length, tuple(arcs))


def make_path(length):
    if length < 1:
        raise InvalidArgument("A directed path needs at least one vertex, not %r" % (length,))
    arcs = [Arc(i, i + 1, Sign.POSITIVE) for i in range(length - 1)]
    return SignedDigraph(length, tuple(arcs))


def join_with_arc(g1, g2, from_vertex, to_vertex, sign=Sign.POSITIVE):
    """Disjoint union of ``g1`` and ``g2`` plus one arc from ``g1`` into ``g2``.

    Vertices of ``g2`` are shifted by ``g1.n_vertices``. The bridging arc only
    points one way, so it never closes a new directed cycle.
    """
    if not 0 <= from_vertex < g1.n_vertices:
        raise InvalidArgument("Vertex %r is not in the first digraph (%d vertices)" % (from_vertex, g1.n_vertices))
    if not 0 <= to_vertex < g2.n_vertices:
        raise InvalidArgument("Vertex %r is not in the second digraph (%d vertices)" % (to_vertex, g2.n_vertices))

    offset = g1.n_vertices
    arcs = list(g1.arcs)
    arcs.extend(Arc(arc.tail + offset, arc.head + offset, arc.sign) for arc in g2.arcs)
    arcs.append(Arc(from_vertex, to_vertex + offset, Sign(sign)))
    return SignedDigraph(g1.n_vertices + g2.n_vertices, tuple(arcs))


def witness_graph(pair, n_vertices=None):
    """Build a connected signed digraph whose directed cycles are the pair's cycles.

    With ``n_vertices`` the graph is padded by a pendant directed path so it
    has exactly that many vertices.
    """
    graph = join_with_arc(make_cycle(pair.c1.length, pair.c1.sign),
        make_cycle(pair.c2.length, pair.c2.sign), 0, 0)
    if n_vertices is None:
        return graph

    padding = n_vertices - graph.n_vertices
    if padding < 0:
        raise InvalidArgument("%s needs %d vertices, more than %d" % (pair, graph.n_vertices, n_vertices))
    if padding:
        graph = join_with_arc(graph, make_path(padding), graph.n_vertices - 1, 0)
    return graph


def adjacency_matrix(g):
    matrix = np.zeros((g.n_vertices, g.n_vertices), dtype=int)
    for tail, head, sign in g.arcs:
        matrix[tail, head] = int(sign)
    return matrix


def to_networkx(g):
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(g.n_vertices))
    for tail, head, sign in g.arcs:
        digraph.add_edge(tail, head, sign=int(sign))
    return digraph


def strong_component_vertices(g):
    components = [sorted(c) for c in nx.strongly_connected_components(to_networkx(g))]
    components.sort(key=lambda vertices: vertices[0])
    return components


def strong_components(g):
    """Return the strong components of ``g`` as induced signed subdigraphs.

    Components are ordered by their smallest original vertex id, and each is
    relabelled densely in ascending order of its original ids.
    """
    return [g.induced(vertices) for vertices in strong_component_vertices(g)]


def as_signed_cycle(g):
    """Return the SignedCycle ``g`` is, or None when ``g`` is not one directed cycle."""
    if g.n_vertices < 2 or len(g.arcs) != g.n_vertices:
        return None

    successor = {}
    for tail, head, sign in g.arcs:
        if tail in successor:
            return None
        successor[tail] = head
    if len(set(successor.values())) != g.n_vertices:
        return None

    # Walk from vertex 0; a single cycle visits every vertex before returning.
    vertex, steps = successor[0], 1
    while vertex != 0:
        vertex = successor[vertex]
        steps += 1
    if steps != g.n_vertices:
        return None

    product = 1
    for arc in g.arcs:
        product *= int(arc.sign)
    return SignedCycle(g.n_vertices, Sign(product))


def cycle_sign(g):
    cycle = as_signed_cycle(g)
    if cycle is None:
        raise InvalidArgument("Digraph with %d vertices and %d arcs is not a single directed cycle"
            % (g.n_vertices, len(g.arcs)))
    return cycle.sign
