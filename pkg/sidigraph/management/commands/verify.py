import logging

from django.core.management.base import CommandError

from sidigraph.management.config import (EXIT_VERIFICATION_FAILED, SidigraphCommand,
    root_max_iterations, verify_n_max)
from sidigraph.verification import iter_checks


log = logging.getLogger(__name__)


class Command(SidigraphCommand):

    help = 'Run every ordering, monotonicity and closed-form check for budgets up to --n-max'

    def add_arguments(self, parser):
        parser.add_argument('--n-max',
            type=int,
            dest='n_max',
            help='Largest vertex budget to check (default from SIDIGRAPH_VERIFY_N_MAX, else 60)',
        )
        self.add_tolerance_argument(parser)

    def run(self, config, n_max=None, verbosity=1, **options):
        if n_max is None:
            n_max = verify_n_max()

        checks = failures = 0
        first_failure = None
        for report in iter_checks(n_max, config.tolerance, root_max_iterations()):
            checks += 1
            if not report.passed:
                failures += 1
                first_failure = first_failure or report
                log.error("Check failed: %s", report)
            if verbosity >= 1:
                self.stdout.write(str(report))

        self.stdout.write('%d checks, %d failed (n <= %d)' % (checks, failures, n_max))
        if first_failure is not None:
            raise CommandError('first failure: %s' % first_failure, returncode=EXIT_VERIFICATION_FAILED)
