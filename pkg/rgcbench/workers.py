import logging

from concurrent.futures import ProcessPoolExecutor

log = logging.getLogger(__name__)


class WorkerPool:
    """
    Order-preserving map over worker processes. With one worker the map
    runs inline, which is also what tests use.
    """

    def __init__(self, workers=1, chunksize=8):
        self.workers = max(1, int(workers))
        self.chunksize = chunksize
        self._executor = None

    @property
    def executor(self):
        if self._executor is None and self.workers > 1:
            log.debug("Starting %d worker processes", self.workers)
            self._executor = ProcessPoolExecutor(max_workers=self.workers)
        return self._executor

    def map(self, fn, jobs):
        jobs = list(jobs)
        if self.workers == 1 or len(jobs) < 2:
            return [fn(job) for job in jobs]
        return list(self.executor.map(fn, jobs, chunksize=self.chunksize))

    def shutdown(self):
        if self._executor is not None:
            self._executor.shutdown()
            self._executor = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.shutdown()
