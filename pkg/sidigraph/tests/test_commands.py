from io import StringIO
import os
import shutil
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from sidigraph.edgelist import dump_edge_list
from sidigraph.graphs import make_cycle, make_path, witness_graph
from sidigraph.management.config import RunConfig
from sidigraph.models import CyclePair, Sign, SignClass, SignedDigraph
from sidigraph.orderings import ordered_sequence


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.tmpdir)

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as cm:
            self.call(*args, **options)
        self.assertEqual(cm.exception.returncode, code)
        return cm.exception

    def write(self, name, text):
        path = os.path.join(self.tmpdir, name)
        with open(path, 'w') as fh:
            fh.write(text)
        return path


class CycleCommandTest(CommandTestCase):

    def test_iota(self):
        self.assertEqual(self.call('cycle', '24', '-', '--iota'), '15.322595  2*csc(pi/24)\n')
        self.assertEqual(self.call('cycle', '2', '+', '--iota'), '0.000000  2*cot(pi/2)\n')

    def test_iota_is_default(self):
        self.assertEqual(self.call('cycle', '3', '+'), '1.732051  cot(pi/6)\n')

    def test_energy(self):
        self.assertEqual(self.call('cycle', '5', '+', '--energy'), '3.236068  csc(pi/10)\n')

    def test_invalid_arguments(self):
        self.assertExitCode(2, 'cycle', '1', '+')
        self.assertExitCode(2, 'cycle', '4', 'x')


class OrderingCommandTest(CommandTestCase):

    def test_csv_for_four(self):
        self.assertEqual(self.call('ordering', '4', '--same-sign', '--format', 'csv'),
            'rank,tie_group,c1_len,c1_sign,c2_len,c2_sign,value\n'
            '1,1,2,-,2,-,4.000000\n'
            '2,2,2,+,2,+,0.000000\n')

    def test_csv_head_for_27(self):
        lines = self.call('ordering', '27', '--same-sign', '--format', 'csv').splitlines()
        self.assertEqual(lines[1], '1,1,2,-,24,-,17.322595')
        self.assertEqual(len(lines), 1 + len(ordered_sequence(27, SignClass.SAME)))

    def test_mixed_rows_put_the_negative_cycle_first(self):
        lines = self.call('ordering', '6', '--mixed', '--with-floating', '--format', 'csv').splitlines()
        self.assertIn('4,-,2,+', ''.join(lines))
        self.assertEqual(len(lines), 4)

    def test_ties_share_a_group(self):
        rows = [line.split(',') for line in self.call('ordering', '22', '--format', 'csv').splitlines()[1:]]
        groups = [row[1] for row in rows]
        self.assertEqual(len(groups) - len(set(groups)), 3)

    def test_text(self):
        text = self.call('ordering', '10', '--mixed')
        self.assertTrue(text.startswith('# n=10 mixed_sign, 7 pairs;'))
        self.assertIn('(C2-,C8+)', text.splitlines()[1])

    def test_svg_is_deterministic(self):
        first = self.call('ordering', '27', '--mixed', '--format', 'svg')
        second = self.call('ordering', '27', '--mixed', '--format', 'svg')
        self.assertEqual(first, second)
        self.assertIn('<svg', first)
        groups = len(ordered_sequence(27, SignClass.MIXED, exclude_floating=True).tie_groups())
        self.assertEqual(first.count('<circle'), groups)

    def test_out(self):
        path = os.path.join(self.tmpdir, 'ordering.csv')
        self.assertEqual(self.call('ordering', '8', '--format', 'csv', '--out', path), '')
        with open(path) as fh:
            self.assertEqual(fh.read(), self.call('ordering', '8', '--format', 'csv'))

    def test_unwritable_out(self):
        path = os.path.join(self.tmpdir, 'missing', 'ordering.csv')
        self.assertExitCode(3, 'ordering', '8', '--out', path)

    def test_small_budget(self):
        self.assertExitCode(2, 'ordering', '3')


class ExtremalCommandTest(CommandTestCase):

    def test_27(self):
        self.assertEqual(self.call('extremal', '27'), 'max (C2-,C24-) 17.322595\nmin (C2+,C2+) 0.000000\n')

    def test_4(self):
        self.assertTrue(self.call('extremal', '4').startswith('max (C2-,C2-) 4.000000\n'))


class FloatingPairCommandTest(CommandTestCase):

    def test_12(self):
        lines = self.call('floating-pair', '12').splitlines()
        self.assertTrue(lines[0].startswith('pair  (C10-,C2+)'))
        self.assertTrue(lines[1].startswith('above (C2-,C8+)'))
        self.assertTrue(lines[2].startswith('below (C4-,C6+)'))
        self.assertTrue(lines[3].endswith(': ok'))

    def test_odd(self):
        self.assertExitCode(2, 'floating-pair', '13')


class VerifyCommandTest(CommandTestCase):

    def test_small(self):
        out = self.call('verify', '--n-max', '10')
        self.assertTrue(out.endswith('0 failed (n <= 10)\n'))
        lines = out.splitlines()
        self.assertEqual(len(lines) - 1, int(lines[-1].split()[0]))
        self.assertTrue(all(line.startswith('ok ') for line in lines[:-1]))
        self.assertEqual(len(self.call('verify', n_max=10, verbosity=0).splitlines()), 1)
        self.assertNotIn('same-sign-chain', self.call('verify', n_max=10, verbosity=2))

    def test_through_30(self):
        out = self.call('verify', n_max=30, verbosity=2)
        self.assertIn('same-sign-chain n=30 [iii]', out)
        self.assertIn('floating-pair n=30 [window 3]', out)
        self.assertNotIn('FAIL', out)

    def test_failure_exit_code(self):
        error = self.assertExitCode(1, 'verify', n_max=10, tolerance=10.0)
        self.assertIn('first failure', str(error))


class SpectrumCommandTest(CommandTestCase):

    def test_negative_cycle(self):
        path = self.write('c4.txt', dump_edge_list(make_cycle(4, Sign.NEGATIVE)))
        lines = self.call('spectrum', path).splitlines()
        self.assertEqual(lines[0], 'eigenvalues')
        self.assertEqual(lines[1].split(), ['0.707107', '0.707107'])
        self.assertEqual(lines[2].split(), ['-0.707107', '0.707107'])
        self.assertIn('iota energy 2.828427', lines)
        self.assertIn('energy 2.828427', lines)
        self.assertIn('strong components 1', lines)

    def test_path(self):
        path = self.write('p5.txt', dump_edge_list(make_path(5)))
        lines = self.call('spectrum', path).splitlines()
        self.assertEqual([line.split() for line in lines[1:6]], [['0.000000', '0.000000']] * 5)
        self.assertIn('energy 0.000000', lines)
        self.assertIn('iota energy 0.000000', lines)
        self.assertIn('strong components 5', lines)

    def test_joined_cycles(self):
        g = witness_graph(CyclePair.of((2, '+'), (4, '-'), 6))
        path = self.write('joined.txt', dump_edge_list(g))
        lines = self.call('spectrum', path).splitlines()
        self.assertIn('iota energy 2.828427', lines)
        self.assertIn('strong components 2', lines)

    def test_round_trip_output(self):
        g = witness_graph(CyclePair.of((6, '-'), (8, '+'), 20), 20)
        first = self.write('first.txt', dump_edge_list(g, comment='first'))
        second = self.write('second.txt', dump_edge_list(g))
        self.assertEqual(self.call('spectrum', first), self.call('spectrum', second))

    def test_parse_error(self):
        path = self.write('bad.txt', 'n 3\n0 1 +2\n')
        error = self.assertExitCode(2, 'spectrum', path)
        self.assertIn('line 2', str(error))

    def test_root_finder_failure(self):
        # A 5-cycle with a negative chord closing a 3-cycle: one strong component, not a cycle.
        arcs = [(v, (v + 1) % 5, 1) for v in range(5)] + [(2, 0, -1)]
        path = self.write('chord.txt', dump_edge_list(SignedDigraph(5, tuple(arcs))))
        self.assertIn('strong components 1', self.call('spectrum', path).splitlines())
        with override_settings(SIDIGRAPH_ROOT_MAX_ITERATIONS=1):
            error = self.assertExitCode(4, 'spectrum', path)
        self.assertIn('after 1 iterations', str(error))
        self.assertIn('worst residual', str(error))

    def test_missing_file(self):
        self.assertExitCode(3, 'spectrum', os.path.join(self.tmpdir, 'nope.txt'))


class RunConfigTest(SimpleTestCase):

    def test_from_options(self):
        config = RunConfig.from_options('ordering', {'n': 27, 'sign_class': 'mixed_sign', 'format': 'svg',
            'out': None, 'tolerance': None})
        self.assertEqual(config.sign_class, SignClass.MIXED)
        self.assertEqual(config.tolerance, 1e-9)
        self.assertEqual(config.format, 'svg')

    def test_tolerance_override(self):
        config = RunConfig.from_options('extremal', {'n': 4, 'tolerance': 1e-6})
        self.assertEqual(config.tolerance, 1e-6)
        self.assertEqual(config.sign_class, SignClass.SAME)
