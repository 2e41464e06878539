'''Lie algebra axioms on one-boundary graphs'''
import logging

from ..chaincx import cohomology
from ..enumeration import default_window
from ..families import Family
from ..liealg import check_axioms
from ..reports import ComparisonReport
from .custom_check import CustomCheck as Check

log = logging.getLogger(__name__)

class AxiomsCheck(Check):
    '''
    Antisymmetry, Jacobi, square-zero and Leibniz for rgc1_d and orgc1_(d+1)
    at the job genus, then a Betti comparison of the two.
    '''
    name = 'axioms'

    def generators(self, spec):
        gens = []
        for degree in default_window(spec, self.config.max_edges):
            basis = self.provider(spec, degree)
            gens.extend(basis.representative(key) for key in basis)
        log.debug("%d generators of %s up to %d edges", len(gens), spec.name, self.config.max_edges)
        return gens

    def run(self):
        report = self.new_report()
        left = self.bench.spec(Family.RGC1)
        right = self.bench.spec(Family.ORGC1, self.config.d + 1)
        for spec in (left, right):
            check_axioms(spec, self.generators(spec), exhaustive_edges=self.config.exhaustive_edges,
                         samples=self.config.samples, seed=self.seed, cache=self.cache, report=report)

        if self.config.degree_window is not None:
            window = list(self.config.degree_window)
        else:
            window = sorted(set(default_window(left, self.config.max_edges))
                            & set(default_window(right, self.config.max_edges)))
        comparison = ComparisonReport(
            cohomology(left, window, self.provider, self.config.prime, self.pool, self.cache),
            cohomology(right, window, self.provider, self.config.prime, self.pool, self.cache),
        )
        report.attach(self.bench.stamp(comparison))
        report.expect('Betti numbers of %s and %s agree on %s' % (left.name, right.name, window), comparison.ok)
        return report
