import os
import tempfile
import time

from django.test import SimpleTestCase

from sidigraph.edgelist import EdgeListError, dump_edge_list, load_edge_list, parse_edge_list
from sidigraph.graphs import make_cycle, witness_graph
from sidigraph.models import CyclePair, Sign


SAMPLE = """\
# C_2^+ joined to C_4^-
n 6
0 1 +1
1 0 +1   # back
0 2 1

2 3 +1
3 4 +1
4 5 +1
5 2 -1
"""


class ParseTest(SimpleTestCase):

    def test_sample(self):
        g = parse_edge_list(SAMPLE)
        self.assertEqual(g, witness_graph(CyclePair.of((2, '+'), (4, '-'), 6)))

    def test_dump_then_parse(self):
        g = witness_graph(CyclePair.of((4, '-'), (6, '+'), 14), 14)
        text = dump_edge_list(g, comment='C4- and C6+')
        self.assertTrue(text.startswith('# C4- and C6+\nn 14\n'))
        self.assertEqual(parse_edge_list(text), g)

    def test_dump_format(self):
        self.assertEqual(dump_edge_list(make_cycle(2, Sign.NEGATIVE)), 'n 2\n0 1 +1\n1 0 -1\n')

    def test_load(self):
        fd, path = tempfile.mkstemp(suffix='.txt')
        self.addCleanup(os.remove, path)
        with os.fdopen(fd, 'w') as fh:
            fh.write(SAMPLE)
        self.assertEqual(load_edge_list(path).n_vertices, 6)


class ParseErrorTest(SimpleTestCase):

    def assertErrorOnLine(self, text, line_number):
        with self.assertRaises(EdgeListError) as cm:
            parse_edge_list(text)
        self.assertEqual(cm.exception.line_number, line_number)
        self.assertTrue(str(cm.exception).startswith('line %d: ' % line_number))

    def test_missing_header(self):
        self.assertErrorOnLine('0 1 +1\n', 1)
        self.assertErrorOnLine('# nothing\n\n', 2)

    def test_bad_vertex_count(self):
        self.assertErrorOnLine('n six\n', 1)
        self.assertErrorOnLine('# zero\nn 0\n', 2)

    def test_bad_sign(self):
        self.assertErrorOnLine('n 3\n0 1 +1\n1 2 2\n', 3)

    def test_bad_fields(self):
        self.assertErrorOnLine('n 3\n0 1\n', 2)
        self.assertErrorOnLine('n 3\n0 x +1\n', 2)

    def test_invalid_arcs(self):
        self.assertErrorOnLine('n 3\n0 1 +1\n0 3 +1\n', 3)
        self.assertErrorOnLine('n 3\n1 1 -1\n', 2)
        self.assertErrorOnLine('n 3\n0 1 +1\n2 0 -1\n0 1 -1\n', 4)


class LargeInputTest(SimpleTestCase):

    def test_dense_graph_parses_in_one_pass(self):
        n = 120
        lines = ['n %d' % n]
        lines.extend('%d %d %s' % (tail, head, '+1' if (tail + head) % 3 else '-1')
            for tail in range(n) for head in range(n) if tail != head)
        started = time.perf_counter()
        g = parse_edge_list('\n'.join(lines) + '\n')
        self.assertLess(time.perf_counter() - started, 10.0)
        self.assertEqual(len(g.arcs), n * (n - 1))
        self.assertEqual(g.arcs[0], (0, 1, Sign.POSITIVE))
        self.assertEqual(g.arcs[2], (0, 3, Sign.NEGATIVE))

    def test_duplicate_at_the_end_of_a_long_list(self):
        n = 200
        lines = ['n %d' % n] + ['%d %d +1' % (v, (v + 1) % n) for v in range(n)] + ['%d 0 -1' % (n - 1)]
        with self.assertRaises(EdgeListError) as cm:
            parse_edge_list('\n'.join(lines))
        self.assertEqual(cm.exception.line_number, n + 2)
        self.assertIn('Duplicate arc %d->0' % (n - 1), str(cm.exception))
