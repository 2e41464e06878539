'''Exact computations in ribbon graph complexes'''
import logging

from .constructs import BetterLogRecord

# name, numeric level, Logger method
EXTRA_LEVELS = (
    ('EVERYTHING', 1, 'everything'),
    ('NOISY', 4, 'noise'),
)

_func_prototype = "def {logger_func_name}(self, message, *args, **kwargs):\n" \
                  "    if self.isEnabledFor({levelname}):\n" \
                  "        self._log({levelname}, message, args, **kwargs)"

def _add_logger_level(levelname, level, func_name):
    """
    :type levelname: str
        The reference name of the level, e.g. NOISY
    :type level: int
        Numeric logging level
    :type func_name: str
        The name of the logger method, e.g. "noise" for log.noise(...)
    """
    taken = getattr(logging, levelname, level)
    if taken != level:
        raise ValueError("log level %s is already registered as %s" % (levelname, taken))

    setattr(logging, levelname, level)
    logging.addLevelName(level, levelname)

    namespace = {}
    exec(_func_prototype.format(logger_func_name=func_name, levelname=levelname), logging.__dict__, namespace)
    setattr(logging.Logger, func_name, namespace[func_name])


for _levelname, _level, _func_name in EXTRA_LEVELS:
    if not hasattr(logging.Logger, _func_name):
        _add_logger_level(_levelname, _level, _func_name)

logging.setLogRecordFactory(BetterLogRecord)

log = logging.getLogger(__name__)
log.setLevel(logging.EVERYTHING)

del _func_prototype
del _add_logger_level

from .workbench import Workbench

__all__ = ['Workbench']
