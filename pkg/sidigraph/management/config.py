from dataclasses import dataclass
import logging
from typing import Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from sidigraph.edgelist import EdgeListError
from sidigraph.models import InvalidArgument, SignClass
from sidigraph.orderings import TIE_TOLERANCE
from sidigraph.spectra import MAX_ITERATIONS, NumericFailure


log = logging.getLogger(__name__)

DEFAULT_VERIFY_N_MAX = 60

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4


def tie_tolerance(options=None):
    if options and options.get('tolerance') is not None:
        return options['tolerance']
    return getattr(settings, 'SIDIGRAPH_TIE_TOLERANCE', TIE_TOLERANCE)


def root_max_iterations():
    return getattr(settings, 'SIDIGRAPH_ROOT_MAX_ITERATIONS', MAX_ITERATIONS)


def verify_n_max():
    return getattr(settings, 'SIDIGRAPH_VERIFY_N_MAX', DEFAULT_VERIFY_N_MAX)


@dataclass(frozen=True)
class RunConfig:

    command: str
    n: Optional[int] = None
    sign_class: SignClass = SignClass.SAME
    out: Optional[str] = None
    format: str = 'text'
    tolerance: float = TIE_TOLERANCE

    @classmethod
    def from_options(cls, command, options):
        return cls(
            command=command,
            n=options.get('n'),
            sign_class=SignClass(options.get('sign_class') or SignClass.SAME),
            out=options.get('out'),
            format=options.get('format') or 'text',
            tolerance=tie_tolerance(options),
        )


class SidigraphCommand(BaseCommand):

    """Maps library errors onto exit codes: 2 for bad input, 3 for I/O, 4 when the root finder gives up."""

    def add_tolerance_argument(self, parser):
        parser.add_argument('--tolerance',
            type=float,
            help='Absolute tolerance for grouping equal values (default %g)' % TIE_TOLERANCE,
        )

    def handle(self, *args, **options):
        config = RunConfig.from_options(self.__module__.rsplit('.', 1)[-1], options)
        log.debug("Running %r", config)
        try:
            self.run(config, **options)
        except (InvalidArgument, EdgeListError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)
        except OSError as exc:
            raise CommandError(str(exc), returncode=EXIT_IO)
        except NumericFailure as exc:
            log.warning("Root finder gave up after %d iterations", exc.iterations)
            raise CommandError(str(exc), returncode=EXIT_NUMERIC)

    def run(self, config, **options):
        raise NotImplementedError

    def emit(self, text, out=None):
        if out is None:
            self.stdout.write(text, ending='')
            return
        with open(out, 'w') as fh:
            fh.write(text)
        log.info("Wrote %d bytes to %s", len(text), out)
