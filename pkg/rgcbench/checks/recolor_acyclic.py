'''Acyclicity of the recolouring complex'''
import logging

from ..chaincx import cohomology
from ..enumeration import enumerate_supports
from ..exceptions import UnsupportedFamilyParam
from ..families import Family, FamilySpec
from .custom_check import CustomCheck as Check

log = logging.getLogger(__name__)

class RecolorAcyclicCheck(Check):
    '''
    For every one-boundary support with at most MaxEdges edges, the mixed
    complex with the recolouring differential has no cohomology.
    '''
    name = 'recolor-acyclic'

    def specs(self):
        for edges in range(1, self.config.max_edges + 1):
            for genus in range(0, edges // 2 + 1):
                try:
                    spec = FamilySpec(Family.MIXED, self.config.d, genus, 1, edges=edges)
                except UnsupportedFamilyParam:
                    continue
                if enumerate_supports(spec, edges):
                    yield spec

    def run(self):
        report = self.new_report()
        for spec in self.specs():
            window = sorted({degree for _, _, degree in enumerate_supports(spec, spec.edges)})
            ranks = cohomology(spec, window, self.provider, self.config.prime, self.pool, self.cache)
            dims = ranks.dims()
            report.details[spec.name] = {'dims': {str(k): v for k, v in sorted(dims.items())}}
            report.expect('%s has zero cohomology' % spec.name, ranks.total_betti == 0,
                          'betti %s' % ranks.betti() if ranks.total_betti else '')
        return report
