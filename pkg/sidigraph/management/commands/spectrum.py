from sidigraph.edgelist import load_edge_list
from sidigraph.graphs import strong_component_vertices
from sidigraph.loaders import fixed
from sidigraph.management.config import SidigraphCommand, root_max_iterations
from sidigraph.spectra import eigenvalues, energy, iota_energy


class Command(SidigraphCommand):

    help = 'Print the spectrum, energy and iota energy of a signed digraph read from an edge-list file'

    def add_arguments(self, parser):
        parser.add_argument('path', help="Edge-list file: an 'n <count>' line, then 'tail head sign' lines")

    def run(self, config, path, **options):
        graph = load_edge_list(path)
        spectrum = eigenvalues(graph, max_iterations=root_max_iterations())

        self.stdout.write('eigenvalues')
        for z in spectrum.sorted_by_argument():
            self.stdout.write('  %12s %12s' % (fixed(z.real), fixed(z.imag)))
        self.stdout.write('energy %s' % fixed(energy(spectrum)))
        self.stdout.write('iota energy %s' % fixed(iota_energy(spectrum)))
        self.stdout.write('strong components %d' % len(strong_component_vertices(graph)))
