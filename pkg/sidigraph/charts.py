"""
Emitters for ordering sequences: CSV rows, a plain-text table and an SVG
step chart. Output depends only on the sequence, so repeated runs are
byte-identical.
"""

import csv
import io
import logging

from sidigraph.loaders import coord, fixed, render_to_string


log = logging.getLogger(__name__)

CSV_COLUMNS = ('rank', 'tie_group', 'c1_len', 'c1_sign', 'c2_len', 'c2_sign', 'value')
TIE_BREAK_NOTE = 'ties ordered by total length desc, first length asc, signs (-,-) < (+,-) < (+,+)'

CHART_WIDTH = 800
CHART_HEIGHT = 480
CHART_MARGIN = (40, 30, 50, 70)  # top, right, bottom, left
Y_TICKS = 5


def _row(entry):
    first, second = entry.pair.display_cycles()
    return (entry.rank, entry.tie_group, first.length, first.sign.symbol,
        second.length, second.sign.symbol, fixed(entry.value))


def ordering_csv(sequence):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for entry in sequence:
        writer.writerow(_row(entry))
    return out.getvalue()


def ordering_text(sequence):
    lines = ['# n=%d %s, %d pairs; %s' % (sequence.budget_n, sequence.sign_class.value, len(sequence), TIE_BREAK_NOTE)]
    for entry in sequence:
        lines.append('%4d %4d  %-12s %s' % (entry.rank, entry.tie_group, entry.pair, fixed(entry.value)))
    return '\n'.join(lines) + '\n'


def _layout(sequence):
    top, right, bottom, left = CHART_MARGIN
    plot_width = CHART_WIDTH - left - right
    plot_height = CHART_HEIGHT - top - bottom
    span = max(len(sequence) - 1, 1)
    y_max = max([entry.value for entry in sequence] + [1.0])

    def x_of(rank):
        return left + (rank - 1) / span * plot_width

    def y_of(value):
        return top + (1 - value / y_max) * plot_height

    steps = []
    previous = None
    for entry in sequence:
        x, y = x_of(entry.rank), y_of(entry.value)
        if previous is not None:
            steps.append((x, previous))
        steps.append((x, y))
        previous = y

    markers = []
    for group in sequence.tie_groups():
        ranks = [entry.rank for entry in group]
        markers.append({
            'x': x_of(sum(ranks) / len(ranks)),
            'y': y_of(group[0].value),
            'size': len(group),
            'label': ' = '.join(str(entry.pair) for entry in group),
            'value': group[0].value,
        })

    ticks = []
    for i in range(Y_TICKS + 1):
        value = y_max * i / Y_TICKS
        ticks.append({'y': y_of(value), 'value': value})

    return {
        'width': CHART_WIDTH,
        'height': CHART_HEIGHT,
        'left': left,
        'top': top,
        'right': left + plot_width,
        'bottom': top + plot_height,
        'steps': ' '.join('%s,%s' % (coord(x), coord(y)) for x, y in steps),
        'markers': markers,
        'ticks': ticks,
    }


def ordering_svg(sequence):
    context = _layout(sequence)
    context['sequence'] = sequence
    context['title'] = 'Iota energy ordering, n=%d, %s' % (sequence.budget_n, sequence.sign_class.value)
    log.debug("Rendering %d tie groups as SVG", len(context['markers']))
    return render_to_string('sidigraph/ordering.svg.jj', context)


FORMATS = {
    'csv': ordering_csv,
    'svg': ordering_svg,
    'text': ordering_text,
}


def render_ordering(sequence, format='text'):
    return FORMATS[format](sequence)
