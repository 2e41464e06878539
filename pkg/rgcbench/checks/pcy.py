'''Square-zero, degree and Leibniz checks for haired quivers'''
import logging
import random

from ..exceptions import BadMatching, TypeMismatch
from ..pcy import PcyTable, compose, generators, pcy_degree, pcy_spec
from .custom_check import CustomCheck as Check

log = logging.getLogger(__name__)

class PcyCheck(Check):
    '''
    Over every hair count p, q >= 1 with p + q <= PcyMaxHairs: the
    differential squares to zero and raises the degree by one, and gluing
    out-hair 1 of one generator into in-hair 1 of another adds degrees and
    satisfies the Leibniz rule.
    '''
    name = 'pcy'

    def hair_counts(self):
        for total in range(2, self.config.pcy_max_hairs + 1):
            for p in range(1, total):
                yield p, total - p

    def run(self):
        d = self.config.d
        report = self.new_report()
        table = PcyTable(d, self.cache)
        shapes = {}
        pool = []
        bad_square = bad_degree = 0

        for p, q in self.hair_counts():
            spec = pcy_spec(d, p, q)
            gens = generators(d, p, q, self.config.pcy_max_vertices, self.config.pcy_max_edges,
                              self.cache, shapes)
            report.details[spec.name] = len(gens)
            for gen in gens:
                delta = table.delta(gen)
                if table.delta(delta):
                    bad_square += 1
                expected = pcy_degree(gen, d) + 1
                if any(pcy_degree(term, d) != expected for term, _ in delta.terms()):
                    bad_degree += 1
                pool.append(gen)
        log.info("pcy: %d generators over %d hair counts", len(pool), len(report.details))

        report.expect('delta^2 = 0 on %d generators' % len(pool), not bad_square,
                      '%d failures' % bad_square if bad_square else '')
        report.expect('delta raises the degree by one', not bad_degree,
                      '%d failures' % bad_degree if bad_degree else '')

        rng = random.Random(self.seed)
        matching = [(1, 1)]
        bad_additive = bad_leibniz = skipped = 0
        for _ in range(self.config.samples if pool else 0):
            x, y = rng.choice(pool), rng.choice(pool)
            try:
                glued = compose(x, matching, y, d)
            except (BadMatching, TypeMismatch):
                skipped += 1
                continue
            if pcy_degree(glued, d) != pcy_degree(x, d) + pcy_degree(y, d):
                bad_additive += 1

            left = table.delta(glued)
            sign = -1 if pcy_degree(x, d) % 2 else 1
            right = table.compose(table.delta(x), matching, y)
            right.add_vector(table.compose(x, matching, table.delta(y)), sign)
            if left != right:
                bad_leibniz += 1
        log.info("pcy: %d memo entries, %d reused", len(table), table.hits)

        report.details['compose_skipped'] = skipped
        report.expect('composition adds degrees', not bad_additive,
                      '%d failures' % bad_additive if bad_additive else '')
        report.expect('Leibniz rule for composition (%d sampled pairs)' % self.config.samples, not bad_leibniz,
                      '%d failures' % bad_leibniz if bad_leibniz else '')
        return report
