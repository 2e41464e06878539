'''Square-zero check of the family differential'''
import logging

from ..chaincx import check_dsquared
from .custom_check import CustomCheck as Check

log = logging.getLogger(__name__)

class DSquaredCheck(Check):
    '''D_(k+1) D_k = 0 over the job window'''
    name = 'dsquared'

    def run(self):
        spec = self.bench.spec()
        report = self.new_report()
        window = self.bench.window(spec)
        log.info("Checking D^2 = 0 for %s on degrees %s", spec.name, window)
        return check_dsquared(spec, window, self.provider, self.pool, self.cache, report)
