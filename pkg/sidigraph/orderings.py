"""
Descending iota-energy orderings of vertex-disjoint even cycle pairs.

The numeric sort of ``ordered_sequence`` is the reference ordering. The
``expected_*`` functions rebuild the chains the closed-form inequalities
predict, and the ``check_*`` functions compare the two and return a
VerificationReport rather than raising.
"""

from dataclasses import dataclass
import logging
from typing import Optional, Tuple

from sidigraph.closed_form import pair_iota
from sidigraph.models import (CyclePair, InvalidArgument, Sign, SignClass,
    SignedCycle, VerificationReport)


log = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-9

# Same-sign pairs below the negative pairs of total 20, as one explicit
# chain; "=" joins exact ties.
SMALL_TOTALS_CHAIN = (
    '10+ 10+ > 8+ 12+ > 2- 16- > 6+ 14+ > 4+ 16+ > 4- 14- > 6- 12- > '
    '8- 10- > 2+ 18+ > 2- 14- > 8+ 10+ > 6+ 12+ > 4+ 14+ > 4- 12- > 6- 10- > '
    '8- 8- > 2+ 16+ > 2- 12- > 8+ 8+ > 6+ 10+ > 4+ 12+ > 4- 10- > 6- 8- > '
    '2+ 14+ > 2- 10- > 6+ 8+ > 4+ 10+ > 4- 8- > 6- 6- > 2+ 12+ > 2- 8- > '
    '6+ 6+ > 4+ 8+ = 4- 6- > 2+ 10+ > 2- 6- > 4- 4- > 4+ 6+ > 2+ 8+ = 2- 4- > '
    '4+ 4+ = 2- 2- > 2+ 6+ > 2+ 4+ > 2+ 2+'
)

# Where (C_{n-2}^-, C_2^+) sits in the full mixed ordering: for n in
# [low, high] it falls between (C_2k^-, C_{n-2-2k}^+) and (C_2k+2^-, C_{n-4-2k}^+).
FLOATING_WINDOWS = (
    (10, 16, 1),
    (18, 22, 2),
    (24, 30, 3),
    (32, 38, 4),
    (40, 46, 5),
    (48, 48, 6),
)
FLOATING_WINDOWS_MAX = 48


@dataclass(frozen=True)
class OrderingEntry:

    pair: CyclePair
    value: float
    rank: int
    tie_group: int


@dataclass(frozen=True)
class OrderingSequence:

    budget_n: int
    sign_class: SignClass
    entries: Tuple[OrderingEntry, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    @property
    def pairs(self):
        return [entry.pair for entry in self.entries]

    @property
    def values(self):
        return [entry.value for entry in self.entries]

    def tie_groups(self):
        groups = []
        for entry in self.entries:
            if groups and groups[-1][0].tie_group == entry.tie_group:
                groups[-1].append(entry)
            else:
                groups.append([entry])
        return groups

    def pairs_by_group(self):
        return [tuple(entry.pair for entry in group) for group in self.tie_groups()]

    def rank_of(self, pair):
        for entry in self.entries:
            if entry.pair == pair:
                return entry.rank
        raise InvalidArgument("%s is not in the ordering for n=%d" % (pair, self.budget_n))


@dataclass(frozen=True)
class FloatingPairReport:

    budget_n: int
    pair: CyclePair
    value: float
    position: int
    above: Optional[OrderingEntry]
    below: Optional[OrderingEntry]
    expected_above: Optional[CyclePair] = None
    expected_below: Optional[CyclePair] = None

    @property
    def has_expectation(self):
        return self.expected_above is not None

    @property
    def matches_expected(self):
        if not self.has_expectation:
            return None
        return (self.above is not None and self.above.pair == self.expected_above
            and self.below is not None and self.below.pair == self.expected_below)

    def __str__(self):
        text = '%s %.6f at rank %d' % (self.pair, self.value, self.position)
        if self.above is not None:
            text += ', below %s %.6f' % (self.above.pair, self.above.value)
        if self.below is not None:
            text += ', above %s %.6f' % (self.below.pair, self.below.value)
        return text


@dataclass(frozen=True)
class ExtremalPairs:

    budget_n: int
    maximum: OrderingEntry
    minimum: OrderingEntry


def _check_budget(budget_n, minimum=4):
    if not isinstance(budget_n, int) or isinstance(budget_n, bool) or budget_n < minimum:
        raise InvalidArgument("Budget must be an integer >= %d, not %r" % (minimum, budget_n))


def _pair(budget_n, first_length, first_sign, second_length, second_sign):
    return CyclePair(SignedCycle(first_length, first_sign), SignedCycle(second_length, second_sign), budget_n)


def enumerate_pairs(budget_n, sign_class=SignClass.SAME):
    """All canonical pairs of vertex-disjoint even cycles fitting in ``budget_n`` vertices."""
    _check_budget(budget_n)
    sign_class = SignClass(sign_class)

    if sign_class is SignClass.SAME:
        patterns = ((Sign.POSITIVE, Sign.POSITIVE), (Sign.NEGATIVE, Sign.NEGATIVE))
    elif sign_class is SignClass.MIXED:
        patterns = ((Sign.NEGATIVE, Sign.POSITIVE), (Sign.POSITIVE, Sign.NEGATIVE))
    else:
        patterns = tuple((s1, s2) for s1 in Sign for s2 in Sign)

    pairs = {}
    for first in range(2, budget_n - 1, 2):
        for second in range(first, budget_n - first + 1, 2):
            for s1, s2 in patterns:
                pair = _pair(budget_n, first, s1, second, s2)
                pairs[(pair.c1, pair.c2)] = pair

    return sorted(pairs.values(), key=lambda pair: (pair.c1.key, pair.c2.key))


def _tie_break(pair):
    return (-pair.total, pair.c1.length, pair.sign_rank)


def ordered_sequence(budget_n, sign_class=SignClass.SAME, exclude_floating=False, tolerance=TIE_TOLERANCE):
    """The pair family for ``budget_n`` sorted by descending iota energy.

    Values within ``tolerance`` of the first value of a run share a tie group;
    inside a group pairs are ordered by total length descending, then first
    cycle length ascending, then sign pattern (-,-) < (+,-) < (+,+).
    """
    sign_class = SignClass(sign_class)
    pairs = enumerate_pairs(budget_n, sign_class)
    if exclude_floating and sign_class is not SignClass.SAME:
        pairs = [pair for pair in pairs if not pair.is_floating]

    scored = sorted(((pair_iota(pair), pair) for pair in pairs),
        key=lambda item: (-item[0], _tie_break(item[1])))

    groups = []
    for value, pair in scored:
        if groups and groups[-1][0][0] - value <= tolerance:
            groups[-1].append((value, pair))
        else:
            groups.append([(value, pair)])

    entries = []
    for group_number, group in enumerate(groups, 1):
        for value, pair in sorted(group, key=lambda item: _tie_break(item[1])):
            entries.append(OrderingEntry(pair, value, len(entries) + 1, group_number))

    log.debug("Ordered %d %s pairs for n=%d into %d tie groups",
        len(entries), sign_class.value, budget_n, len(groups))
    return OrderingSequence(budget_n, sign_class, tuple(entries))


def _parse_chain(text, budget_n):
    groups = []
    for group_text in text.split('>'):
        group = []
        for pair_text in group_text.split('='):
            first, second = pair_text.split()
            pair = CyclePair.of((int(first[:-1]), first[-1]), (int(second[:-1]), second[-1]), max(budget_n, 4))
            group.append(pair)
        groups.append(tuple(group))
    return groups


def _small_totals_chain(budget_n):
    # Pair values do not depend on the budget, so any budget keeps the
    # subsequence of pairs that fit.
    fitting = []
    for group in _parse_chain(SMALL_TOTALS_CHAIN, 20):
        kept = tuple(CyclePair(pair.c1, pair.c2, budget_n) for pair in group if pair.total <= budget_n)
        if kept:
            fitting.append(kept)
    return fitting


def same_sign_case(budget_n):
    """Which parity case of the same-sign ordering applies to ``budget_n``."""
    if budget_n < 22:
        return 'v'
    if budget_n % 2 == 0:
        return 'i' if (budget_n // 2) % 2 == 0 else 'iii'
    return 'ii' if ((budget_n - 1) // 2) % 2 == 0 else 'iv'


def _negative_run(budget_n, total):
    # Largest first: 2csc(pi/m) + 2csc(pi/(T-m)) decreases towards the centre.
    centre = (total // 2) - (total // 2) % 2
    return [_pair(budget_n, m, Sign.NEGATIVE, total - m, Sign.NEGATIVE) for m in range(2, centre + 1, 2)]


def _positive_run(budget_n, total):
    # Largest first: 2cot(pi/m) + 2cot(pi/(T-m)) increases towards the centre.
    centre = (total // 2) - (total // 2) % 2
    return [_pair(budget_n, m, Sign.POSITIVE, total - m, Sign.POSITIVE) for m in range(centre, 1, -2)]


def expected_same_sign_chain(budget_n):
    """The same-sign ordering as the closed-form inequalities predict it, as tie groups."""
    _check_budget(budget_n)
    if budget_n < 22:
        head = _negative_run(budget_n, 20) if budget_n >= 20 else []
        return [(pair,) for pair in head] + _small_totals_chain(budget_n)

    top = budget_n - budget_n % 2
    chain = list(_negative_run(budget_n, top))
    for total in range(top, 21, -2):
        below = _negative_run(budget_n, total - 2)
        chain.extend(pair for pair in _positive_run(budget_n, total) if pair.c1.length >= 6)
        chain.append(below[0])
        chain.append(_pair(budget_n, 4, Sign.POSITIVE, total - 4, Sign.POSITIVE))
        chain.extend(below[1:])
        chain.append(_pair(budget_n, 2, Sign.POSITIVE, total - 2, Sign.POSITIVE))

    groups = [(pair,) for pair in chain]
    groups.extend(_small_totals_chain(budget_n))
    return groups


def expected_mixed_chain(budget_n):
    """The mixed ordering without floating pairs: blocks by total, negative cycle growing."""
    _check_budget(budget_n)
    top = budget_n - budget_n % 2
    chain = []
    for total in range(top, 5, -2):
        chain.extend(_pair(budget_n, m, Sign.NEGATIVE, total - m, Sign.POSITIVE) for m in range(2, total - 3, 2))
    chain.append(_pair(budget_n, 2, Sign.NEGATIVE, 2, Sign.POSITIVE))
    return [(pair,) for pair in chain]


def _describe_groups(groups):
    return ' = '.join(str(pair) for pair in groups) if groups else 'nothing'


def _compare_chains(check, budget_n, expected, sequence, case):
    actual = sequence.pairs_by_group()
    for index, (want, got) in enumerate(zip(expected, actual)):
        if want != got:
            detail = 'group %d: expected %s, numeric order has %s' % (
                index + 1, _describe_groups(want), _describe_groups(got))
            return VerificationReport(check, budget_n, False, detail, case)
    if len(expected) != len(actual):
        detail = 'expected %d groups, numeric order has %d' % (len(expected), len(actual))
        return VerificationReport(check, budget_n, False, detail, case)
    ties = sum(1 for group in actual if len(group) > 1)
    detail = '%d pairs in %d groups, %d ties' % (len(sequence), len(actual), ties)
    return VerificationReport(check, budget_n, True, detail, case)


def check_same_sign_chain(budget_n, tolerance=TIE_TOLERANCE):
    """Compare the predicted same-sign chain with the numeric sort, tie groups included."""
    _check_budget(budget_n, 22)
    sequence = ordered_sequence(budget_n, SignClass.SAME, tolerance=tolerance)
    return _compare_chains('same-sign-chain', budget_n, expected_same_sign_chain(budget_n),
        sequence, same_sign_case(budget_n))


def check_mixed_chain(budget_n, tolerance=TIE_TOLERANCE):
    sequence = ordered_sequence(budget_n, SignClass.MIXED, exclude_floating=True, tolerance=tolerance)
    case = 'i' if budget_n % 2 == 0 else 'ii'
    return _compare_chains('mixed-chain', budget_n, expected_mixed_chain(budget_n), sequence, case)


def _check_strict(check, budget_n, chain, tolerance, case=''):
    values = [pair_iota(pair) for pair in chain]
    for (upper, upper_value), (lower, lower_value) in zip(zip(chain, values), zip(chain[1:], values[1:])):
        if upper_value - lower_value <= tolerance:
            detail = '%s %.9f is not above %s %.9f' % (upper, upper_value, lower, lower_value)
            return VerificationReport(check, budget_n, False, detail, case)
    detail = ' > '.join(str(pair) for pair in chain)
    return VerificationReport(check, budget_n, True, detail, case)


def _check_even(budget_n, minimum):
    _check_budget(budget_n, minimum)
    if budget_n % 2:
        raise InvalidArgument("Budget must be even, not %d" % budget_n)


def check_center_crossover(budget_n, tolerance=TIE_TOLERANCE):
    """Pairs of total exactly ``budget_n``: negative pairs descend to the centre, then positive ones leave it."""
    _check_even(budget_n, 6)
    chain = _negative_run(budget_n, budget_n) + _positive_run(budget_n, budget_n)
    case = 'n/2 even' if (budget_n // 2) % 2 == 0 else 'n/2 odd'
    return _check_strict('center-crossover', budget_n, chain, tolerance, case)


def check_head_interleaving(budget_n, tolerance=TIE_TOLERANCE):
    """Where the positive pairs of total n slot between negative pairs of total n - 2."""
    _check_even(budget_n, 22)
    n = budget_n
    half = (n - 2) // 2
    if (n // 2) % 2:
        case = 'n/2 odd'
        outer = (half, n - 2 - half)
    else:
        case = 'n/2 even'
        outer = (half - 1, half + 1)

    chains = [
        [_pair(n, outer[0], Sign.NEGATIVE, outer[1], Sign.NEGATIVE),
            _pair(n, 2, Sign.POSITIVE, n - 2, Sign.POSITIVE),
            _pair(n, outer[0], Sign.POSITIVE, outer[1], Sign.POSITIVE)],
        [_pair(n, 6, Sign.POSITIVE, n - 6, Sign.POSITIVE),
            _pair(n, 2, Sign.NEGATIVE, n - 4, Sign.NEGATIVE),
            _pair(n, 4, Sign.POSITIVE, n - 4, Sign.POSITIVE)],
    ]
    details = []
    for chain in chains:
        report = _check_strict('head-interleaving', n, chain, tolerance, case)
        if not report.passed:
            return report
        details.append(report.detail)
    return VerificationReport('head-interleaving', n, True, '; '.join(details), case)


def check_mixed_block(budget_n, tolerance=TIE_TOLERANCE):
    """Mixed pairs of total exactly ``budget_n`` descend as the negative cycle grows."""
    _check_even(budget_n, 4)
    chain = [_pair(budget_n, m, Sign.NEGATIVE, budget_n - m, Sign.POSITIVE) for m in range(2, budget_n - 1, 2)]
    return _check_strict('mixed-block', budget_n, chain, tolerance)


def floating_window(budget_n):
    for low, high, k in FLOATING_WINDOWS:
        if low <= budget_n <= high:
            return k
    return None


def locate_floating_pair(budget_n, tolerance=TIE_TOLERANCE):
    """Rank and neighbours of (C_{n-2}^-, C_2^+) in the full mixed ordering."""
    _check_even(budget_n, 10)
    pair = _pair(budget_n, budget_n - 2, Sign.NEGATIVE, 2, Sign.POSITIVE)
    sequence = ordered_sequence(budget_n, SignClass.MIXED, exclude_floating=False, tolerance=tolerance)
    position = sequence.rank_of(pair)
    entry = sequence[position - 1]
    above = sequence[position - 2] if position > 1 else None
    below = sequence[position] if position < len(sequence) else None

    expected_above = expected_below = None
    k = floating_window(budget_n)
    if k is not None:
        expected_above = _pair(budget_n, 2 * k, Sign.NEGATIVE, budget_n - 2 - 2 * k, Sign.POSITIVE)
        expected_below = _pair(budget_n, 2 * k + 2, Sign.NEGATIVE, budget_n - 4 - 2 * k, Sign.POSITIVE)
    else:
        log.debug("No stated window for the floating pair at n=%d", budget_n)

    return FloatingPairReport(budget_n, pair, entry.value, position, above, below,
        expected_above, expected_below)


def check_floating_pair(budget_n, tolerance=TIE_TOLERANCE):
    report = locate_floating_pair(budget_n, tolerance)
    case = 'window %d' % floating_window(budget_n) if report.has_expectation else ''
    if report.has_expectation and not report.matches_expected:
        detail = 'expected between %s and %s; %s' % (report.expected_above, report.expected_below, report)
        return VerificationReport('floating-pair', budget_n, False, detail, case)
    return VerificationReport('floating-pair', budget_n, True, str(report), case)


def extremal_pairs(budget_n, tolerance=TIE_TOLERANCE):
    """The pairs of largest and smallest iota energy over both sign families."""
    sequence = ordered_sequence(budget_n, SignClass.ANY, tolerance=tolerance)
    return ExtremalPairs(budget_n, sequence[0], sequence[-1])


def check_extremal(budget_n, tolerance=TIE_TOLERANCE):
    extremes = extremal_pairs(budget_n, tolerance)
    longest = budget_n - 2 if budget_n % 2 == 0 else budget_n - 3
    expected_max = _pair(budget_n, 2, Sign.NEGATIVE, longest, Sign.NEGATIVE)
    expected_min = _pair(budget_n, 2, Sign.POSITIVE, 2, Sign.POSITIVE)

    values = [pair_iota(pair) for pair in enumerate_pairs(budget_n, SignClass.ANY)]
    problems = []
    if extremes.maximum.pair != expected_max:
        problems.append('maximum is %s, expected %s' % (extremes.maximum.pair, expected_max))
    if extremes.minimum.pair != expected_min:
        problems.append('minimum is %s, expected %s' % (extremes.minimum.pair, expected_min))
    if extremes.maximum.value != max(values) or extremes.minimum.value != min(values):
        problems.append('ordering extremes disagree with exhaustive search')

    case = 'n even' if budget_n % 2 == 0 else 'n odd'
    if problems:
        return VerificationReport('extremal', budget_n, False, '; '.join(problems), case)
    detail = 'max %s %.6f, min %s %.6f' % (extremes.maximum.pair, extremes.maximum.value,
        extremes.minimum.pair, extremes.minimum.value)
    return VerificationReport('extremal', budget_n, True, detail, case)
