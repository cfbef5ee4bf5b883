from setuptools import setup

setup(
    name='sidigraph',
    version='1.0',
    packages=['sidigraph', 'sidigraph.management', 'sidigraph.management.commands', 'sidigraph.tests'],
    include_package_data=True,
    package_data={'sidigraph': ['templates/sidigraph/*.jj']},

    install_requires=['Django>=3.1', 'Jinja2', 'numpy', 'networkx'],
)
