import os.path
import subprocess

try:
  VERSION = subprocess.check_output(
      ["git", "describe", "--tags", "--always"], stderr=subprocess.DEVNULL
  ).decode('ascii').strip()
except Exception:
  VERSION = 'version_unknown'

DEFAULT_PRIME = 32003
DENSE_RANK_LIMIT = 500

CACHE_PATH = os.path.join(os.getcwd(), 'cache')
REPORT_PATH = os.path.join(os.getcwd(), 'reports')
LOG_FILE = 'logs/rgcbench.log'

# one-byte key prefixes
TAG_PLAIN = 'U'
TAG_RGC = 'R'
TAG_ORGC = 'O'
TAG_RGC1 = 'r'
TAG_ORGC1 = 'o'
TAG_MIXED = 'M'
TAG_PCY = 'P'

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
