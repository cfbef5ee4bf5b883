from sidigraph.loaders import fixed
from sidigraph.management.config import SidigraphCommand
from sidigraph.orderings import extremal_pairs


class Command(SidigraphCommand):

    help = 'Print the cycle pairs of largest and smallest iota energy for a vertex budget'

    def add_arguments(self, parser):
        parser.add_argument('n', type=int, help='Vertex budget, at least 4')
        self.add_tolerance_argument(parser)

    def run(self, config, **options):
        extremes = extremal_pairs(config.n, config.tolerance)
        self.stdout.write('max %s %s' % (extremes.maximum.pair, fixed(extremes.maximum.value)))
        self.stdout.write('min %s %s' % (extremes.minimum.pair, fixed(extremes.minimum.value)))
