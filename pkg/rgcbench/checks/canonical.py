'''Randomised checks of canonical forms and orientation signs'''
import logging
import random

from ..canonical import Diagram, canonical_class
from ..ribbon import OrientationData, RibbonGraph
from .custom_check import CustomCheck as Check

log = logging.getLogger(__name__)

MAX_HALF_EDGES = 16


def random_graph(rng, n_half):
    '''Uniform sigma0 and a uniform fixed-point-free involution'''
    sigma0 = list(range(n_half))
    rng.shuffle(sigma0)
    ends = list(range(n_half))
    rng.shuffle(ends)
    sigma1 = [0] * n_half
    for a, b in zip(ends[::2], ends[1::2]):
        sigma1[a], sigma1[b] = b, a
    return RibbonGraph(tuple(sigma0), tuple(sigma1))


def random_orientation(rng, graph, odd):
    if odd:
        items = [('v', cycle[rng.randrange(len(cycle))]) for cycle in graph.vertices]
        edge_dirs = frozenset(rng.choice(edge) for edge in graph.edges)
    else:
        items = [('e', rng.choice(edge)) for edge in graph.edges]
        edge_dirs = None
    rng.shuffle(items)
    return OrientationData(odd, tuple(items), edge_dirs, 1)


def planted_zero():
    '''A loop at one vertex: the half-turn reverses the loop's direction'''
    graph = RibbonGraph((1, 0), (1, 0))
    return Diagram(graph, OrientationData(True, (('v', 0),), frozenset({0}), 1))


class CanonicalCheck(Check):
    '''
    Random connected ribbon graphs under random relabelings: the key is
    invariant, relabeling keeps the sign and a transposition of the
    orientation order flips it.
    '''
    name = 'canonical'

    def run(self):
        report = self.new_report()
        rng = random.Random(self.seed)
        tried = bad_key = bad_sign = bad_swap = 0

        while tried < self.config.samples:
            n_half = 2 * rng.randint(1, MAX_HALF_EDGES // 2)
            graph = random_graph(rng, n_half)
            if not graph.is_connected:
                continue
            tried += 1
            diagram = Diagram(graph, random_orientation(rng, graph, rng.random() < 0.5))
            perm = list(range(n_half))
            rng.shuffle(perm)

            before = canonical_class(diagram, self.cache)
            after = canonical_class(diagram.relabel(perm), self.cache)
            if before.key != after.key:
                bad_key += 1
                continue
            if before.is_zero != after.is_zero or (not before.is_zero and before.sign != after.sign):
                bad_sign += 1
            if len(diagram.orientation.order) >= 2 and not before.is_zero:
                swapped = diagram.with_orientation(diagram.orientation.swapped(0, 1))
                if canonical_class(swapped, self.cache).sign != -before.sign:
                    bad_swap += 1

        report.expect('keys agree under relabeling (%d graphs)' % tried, not bad_key,
                      '%d failures' % bad_key if bad_key else '')
        report.expect('signs agree under relabeling', not bad_sign,
                      '%d failures' % bad_sign if bad_sign else '')
        report.expect('a transposition negates the sign', not bad_swap,
                      '%d failures' % bad_swap if bad_swap else '')
        report.expect('the one-vertex loop is a zero class', canonical_class(planted_zero(), self.cache).is_zero)
        return report
