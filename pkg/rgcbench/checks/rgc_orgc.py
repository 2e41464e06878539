'''Betti comparison of RGC_d and ORGC_(d+1)'''
import logging

from ..chaincx import compare_rgc_orgc
from ..enumeration import default_window
from ..families import Family
from .custom_check import CustomCheck as Check

log = logging.getLogger(__name__)

class RgcOrgcCheck(Check):
    '''
    Degree by degree equality of the Betti numbers of RGC_d and ORGC_(d+1) at
    the job genus and boundary count. The default window is the set of
    degrees both families reach within MaxEdges.
    '''
    name = 'rgc-orgc'
    aliases = ('theorem11',)

    def window(self):
        if self.config.degree_window is not None:
            return list(self.config.degree_window)
        left = default_window(self.bench.spec(Family.RGC), self.config.max_edges)
        right = default_window(self.bench.spec(Family.ORGC, self.config.d + 1), self.config.max_edges)
        return sorted(set(left) & set(right))

    def run(self):
        report = self.new_report()
        window = self.window()
        comparison = compare_rgc_orgc(
            self.config.d, self.config.genus, self.config.boundaries, window,
            self.provider, self.config.prime, self.pool, self.cache, drop_passing=self.config.drop_passing,
        )
        report.attach(self.bench.stamp(comparison))
        report.expect('Betti numbers of %s and %s agree on %s' % (
            comparison.left.spec['name'], comparison.right.spec['name'], window), comparison.ok)
        return report
