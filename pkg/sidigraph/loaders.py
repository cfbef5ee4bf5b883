"""
Jinja2 environment for the chart templates.

Templates live under ``sidigraph/templates/`` and carry a ``.jj`` suffix;
anything else is reported as missing, the same way Django's loaders do.
"""

import os

from django.template import TemplateDoesNotExist
import jinja2


TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'templates')


def fixed(value, places=6):
    text = '%.*f' % (places, value)
    # Never print "-0.000000".
    if text.lstrip('-').strip('0.') == '':
        text = text.lstrip('-')
    return text


def coord(value):
    return fixed(value, 2)


env = jinja2.Environment(
    loader=jinja2.FileSystemLoader(TEMPLATE_DIR),
    autoescape=True,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)

# These are available to all templates.
env.filters['fixed'] = fixed
env.filters['coord'] = coord


def get_template(template_name):
    if not template_name.endswith('.jj'):
        raise TemplateDoesNotExist(template_name)
    try:
        return env.get_template(template_name)
    except jinja2.TemplateNotFound:
        raise TemplateDoesNotExist(template_name)


def render_to_string(template_name, context):
    return get_template(template_name).render(**context)
