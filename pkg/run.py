#!/usr/bin/env python3

import os
import sys
import logging
import tempfile
import importlib.metadata
import importlib.util

from shutil import disk_usage, rmtree
from pathlib import Path


# Setup initial loggers

tmpfile = tempfile.TemporaryFile('w+', encoding='utf8')
log = logging.getLogger('launcher')
log.setLevel(logging.DEBUG)

sh = logging.StreamHandler(stream=sys.stderr)
sh.setFormatter(logging.Formatter(
    fmt="[%(levelname)s] %(name)s: %(message)s"
))

sh.setLevel(logging.INFO)
log.addHandler(sh)

tfh = logging.StreamHandler(stream=tmpfile)
tfh.setFormatter(logging.Formatter(
    fmt="[%(relativeCreated).9f] %(asctime)s - %(levelname)s - %(name)s: %(message)s"
))
tfh.setLevel(logging.DEBUG)
log.addHandler(tfh)

LOG_FILE = "logs/rgcbench.log"


def finalize_logging():
    os.makedirs(os.path.dirname(LOG_FILE), exist_ok=True)

    if os.path.isfile(LOG_FILE):
        log.debug("Moving old rgcbench log")
        try:
            if os.path.isfile(LOG_FILE + ".last"):
                os.unlink(LOG_FILE + ".last")
            os.rename(LOG_FILE, LOG_FILE + ".last")
        except OSError:
            pass

    with open(LOG_FILE, 'w', encoding='utf8') as f:
        tmpfile.seek(0)
        f.write(tmpfile.read())
        tmpfile.close()

        f.write('\n')
        f.write(" PRE-RUN SANITY CHECKS PASSED ".center(80, '#'))
        f.write('\n\n')

    global tfh
    log.removeHandler(tfh)
    del tfh

    fh = logging.FileHandler(LOG_FILE, mode='a')
    fh.setFormatter(logging.Formatter(
        fmt="[%(relativeCreated).9f] %(name)s-%(levelname)s: %(message)s"
    ))
    fh.setLevel(logging.DEBUG)
    log.addHandler(fh)


def sanity_checks(optional=True):
    log.debug("Starting sanity checks")
    ## Required

    # Make sure we're on Python 3.9+
    req_ensure_py3()

    # Make sure the numeric stack is importable
    req_check_deps()

    # Make sure we're in a writeable env
    req_ensure_env()

    # Make our folders if needed
    req_ensure_folders()

    log.debug("Required checks passed.")

    ## Optional
    if not optional:
        return

    # Check disk usage
    opt_check_disk_space()

    log.debug("Optional checks passed.")


def req_ensure_py3():
    if sys.version_info < (3, 9):
        log.critical("Python 3.9+ is required. This version is %s", sys.version.split()[0])
        sys.exit(2)


REQUIRED_MODULES = (
    ('colorlog', None),
    ('networkx', (2, 5)),
    ('numpy', (1, 19)),
)


def _version_tuple(text):
    parts = []
    for piece in text.split('.')[:2]:
        digits = ''.join(ch for ch in piece if ch.isdigit())
        parts.append(int(digits or 0))
    return tuple(parts)


def req_check_deps():
    missing = [name for name, _ in REQUIRED_MODULES if importlib.util.find_spec(name) is None]
    if missing:
        log.critical("Missing packages: %s. Run: pip install -r requirements.txt", ', '.join(missing))
        sys.exit(2)

    for name, least in REQUIRED_MODULES:
        if least is None:
            continue
        try:
            found = importlib.metadata.version(name)
        except importlib.metadata.PackageNotFoundError:
            continue
        if _version_tuple(found) < least:
            log.critical("%s %s is too old, %s or newer is required", name, found, '.'.join(map(str, least)))
            sys.exit(2)


def req_ensure_env():
    try:
        assert os.path.isdir('config'), 'folder "config" not found'
        assert os.path.isfile('rgcbench/__init__.py'), 'rgcbench folder is not a Python module'
        assert importlib.util.find_spec('rgcbench'), "rgcbench module is not importable"
    except AssertionError as e:
        log.critical("Failed environment check, %s", e)
        sys.exit(2)

    try:
        os.mkdir('rgcbench-test-folder')
    except Exception:
        log.critical("Current working directory does not seem to be writable")
        log.critical("Please move rgcbench to a folder that is writable")
        sys.exit(2)
    finally:
        rmtree('rgcbench-test-folder', True)


def req_ensure_folders():
    Path('logs').mkdir(exist_ok=True)
    Path('cache').mkdir(exist_ok=True)
    Path('reports').mkdir(exist_ok=True)


def opt_check_disk_space(warnlimit_mb=200):
    if disk_usage('.').free < warnlimit_mb*1024*1024:
        log.warning("Less than %sMB of free space remains on this device, the basis cache may not fit" % warnlimit_mb)


def main():
    argv = sys.argv[1:]
    if '--no-checks' in argv:
        argv.remove('--no-checks')
    else:
        sanity_checks()

    finalize_logging()

    from rgcbench.cli import main as cli_main
    return cli_main(argv)


if __name__ == '__main__':
    sys.exit(main())
