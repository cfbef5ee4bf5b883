from sidigraph.closed_form import energy_case, iota_energy_case
from sidigraph.loaders import fixed
from sidigraph.management.config import SidigraphCommand
from sidigraph.models import Sign


class Command(SidigraphCommand):

    help = 'Print the closed-form energy or iota energy of a signed directed cycle'

    def add_arguments(self, parser):
        parser.add_argument('n', type=int, help='Cycle length, at least 2')
        parser.add_argument('sign', help='Cycle sign, + or -')
        which = parser.add_mutually_exclusive_group()
        which.add_argument('--iota',
            action='store_const',
            const='iota',
            dest='which',
            help='Iota energy: sum of |Im| over the spectrum (default)',
        )
        which.add_argument('--energy',
            action='store_const',
            const='energy',
            dest='which',
            help='Energy: sum of |Re| over the spectrum',
        )

    def run(self, config, n, sign, which=None, **options):
        case = energy_case if which == 'energy' else iota_energy_case
        value, label = case(n, Sign.parse(sign))
        self.stdout.write('%s  %s' % (fixed(value), label))
