'''Known cohomology values in low degrees'''
import logging

from ..chaincx import cohomology
from ..families import Family, FamilySpec
from ..reports import ComparisonReport
from .custom_check import CustomCheck as Check

log = logging.getLogger(__name__)

class ClassicalCheck(Check):
    '''
    Pins: genus zero with three boundaries at d = 2, genus one with one
    boundary at d = 2, and the oriented genus one complex at d = 3 matching it.
    '''
    name = 'classical'
    aliases = ('pins',)

    def ranks(self, spec, window):
        result = cohomology(spec, window, self.provider, self.config.prime, self.pool, self.cache)
        return self.bench.stamp(result)

    def run(self):
        report = self.new_report()

        three = self.ranks(FamilySpec(Family.RGC, 2, 0, 3), [-2, -1])
        report.attach(three)
        report.expect('rgc d2 g0 m3: three generators in degree -2', three.dims().get(-2) == 3,
                      'dim %s' % three.dims().get(-2))
        report.expect('rgc d2 g0 m3: betti 1 in degree -1', three.betti().get(-1) == 1,
                      'betti %s' % three.betti().get(-1))

        one = self.ranks(FamilySpec(Family.RGC1, 2, 1, 1), [-1])
        report.attach(one)
        report.expect('rgc1 d2 g1: betti 1 in degree -1', one.betti().get(-1) == 1,
                      'betti %s' % one.betti().get(-1))

        oriented = self.ranks(FamilySpec(Family.ORGC1, 3, 1, 1), [-1])
        comparison = report.attach(self.bench.stamp(ComparisonReport(one, oriented)))
        report.expect('orgc1 d3 g1 matches rgc1 d2 g1 in degree -1', comparison.ok)
        return report
