from sidigraph.charts import FORMATS, render_ordering
from sidigraph.management.config import SidigraphCommand
from sidigraph.models import SignClass
from sidigraph.orderings import ordered_sequence


class Command(SidigraphCommand):

    help = 'Write the descending iota-energy ordering of cycle pairs as text, CSV or SVG'

    def add_arguments(self, parser):
        parser.add_argument('n', type=int, help='Vertex budget, at least 4')
        family = parser.add_mutually_exclusive_group()
        family.add_argument('--same-sign',
            action='store_const',
            const=SignClass.SAME.value,
            dest='sign_class',
            help='Pairs whose cycles share a sign (default)',
        )
        family.add_argument('--mixed',
            action='store_const',
            const=SignClass.MIXED.value,
            dest='sign_class',
            help='Pairs of one negative and one positive cycle',
        )
        parser.add_argument('--with-floating',
            action='store_true',
            dest='with_floating',
            default=False,
            help='Keep (C_m^-, C_2^+) pairs with m >= 4 in the mixed ordering',
        )
        parser.add_argument('--format',
            choices=sorted(FORMATS),
            default='text',
        )
        parser.add_argument('--out',
            help='Write to this path instead of standard output',
        )
        self.add_tolerance_argument(parser)

    def run(self, config, with_floating=False, **options):
        sequence = ordered_sequence(config.n, config.sign_class,
            exclude_floating=not with_floating, tolerance=config.tolerance)
        self.emit(render_ordering(sequence, config.format), config.out)
