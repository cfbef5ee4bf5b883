from sidigraph.loaders import fixed
from sidigraph.management.config import SidigraphCommand
from sidigraph.orderings import locate_floating_pair


class Command(SidigraphCommand):

    help = 'Locate (C_{n-2}^-, C_2^+) in the full mixed ordering for an even budget n >= 10'

    def add_arguments(self, parser):
        parser.add_argument('n', type=int, help='Even vertex budget, at least 10')
        self.add_tolerance_argument(parser)

    def run(self, config, **options):
        report = locate_floating_pair(config.n, config.tolerance)
        self.stdout.write('pair  %s %s rank %d' % (report.pair, fixed(report.value), report.position))
        for label, entry in (('above', report.above), ('below', report.below)):
            if entry is not None:
                self.stdout.write('%s %s %s rank %d' % (label, entry.pair, fixed(entry.value), entry.rank))
        if report.has_expectation:
            self.stdout.write('expected between %s and %s: %s' % (report.expected_above, report.expected_below,
                'ok' if report.matches_expected else 'MISMATCH'))
