from hashlib import md5
import os
import sys
import tempfile


def write_file(filename, contents):
    """
    Writes one item per line, replacing the target atomically.
    """
    directory = os.path.dirname(os.path.abspath(filename))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix='.tmp-', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf8') as f:
            for item in contents:
                f.write(str(item))
                f.write('\n')
        os.replace(tmp, filename)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def md5sum(filename, limit=0):
    fhash = md5()
    with open(filename, "rb") as f:
        for chunk in iter(lambda: f.read(8192), b""):
            fhash.update(chunk)
    return fhash.hexdigest()[-limit:]


def safe_print(content, *, end='\n', flush=True):
    sys.stdout.buffer.write((content + end).encode('utf-8', 'replace'))
    if flush: sys.stdout.flush()


def sign_of_permutation(perm):
    '''+1 or -1 for a permutation given as a list of images'''
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        h = start
        while not seen[h]:
            seen[h] = True
            h = perm[h]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sign_of_sorting(seq):
    '''Sign of the permutation that sorts seq (entries distinct)'''
    order = sorted(range(len(seq)), key=seq.__getitem__)
    return sign_of_permutation(order)


def parse_window(text):
    """
    Parses "lo..hi" (inclusive) or a single integer into a range.
    Returns None for an empty string.
    """
    text = (text or '').strip()
    if not text:
        return None
    if '..' in text:
        lo, hi = text.split('..', 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError("window %r is empty" % text)
    return range(lo, hi + 1)
