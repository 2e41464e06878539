import shutil
import textwrap

# Base class for exceptions
class RgcBenchException(Exception):
    def __init__(self, message):
        super().__init__(message)
        self._message = message

    @property
    def message(self):
        return self._message

    @property
    def message_no_format(self):
        return self._message

# A permutation array is not a bijection of {0..n-1}
class NotPermutation(RgcBenchException):
    pass

# sigma1 squared is not the identity
class NotInvolution(RgcBenchException):
    pass

# sigma1 fixes a half-edge
class HasFixedPoint(RgcBenchException):
    pass

# sigma0 and sigma1 do not act transitively
class Disconnected(RgcBenchException):
    pass

# The grading does not pin the graph size for this family and d
class InfiniteDegreePiece(RgcBenchException):
    def __init__(self, message, *, d=None):
        super().__init__(message)
        self.d = d

    @property
    def hint(self):
        if self.d == 1:
            return "Choose d != 1 for this family; its degree pieces are unbounded at d = 1."
        return "Fix the genus and boundary count so the degree pins the graph size."

# A family parameter is outside what the workbench supports
class UnsupportedFamilyParam(RgcBenchException):
    pass

# An operation was handed a graph of another family
class WrongFamily(RgcBenchException):
    pass

# A haired quiver fails the generator predicate
class NotAGenerator(RgcBenchException):
    pass

# Hair matching for a composition is empty, not injective or names a missing hair
class BadMatching(RgcBenchException):
    pass

# A matched hair has the wrong direction
class TypeMismatch(RgcBenchException):
    pass

# Exact and modular ranks disagree
class RankMismatch(RgcBenchException):
    def __init__(self, message, *, rank_q=None, rank_p=None, prime=None):
        super().__init__(message)
        self.rank_q = rank_q
        self.rank_p = rank_p
        self.prime = prime

# A basis grew past the configured size limit
class ResourceLimit(RgcBenchException):
    pass

# An asserted structural property failed on a computed term
class InvariantViolation(RgcBenchException):
    pass

# Error with pretty formatting for hand-holding users through various errors
class HelpfulError(RgcBenchException):
    def __init__(self, issue, solution, *, preface="An error has occured:", footnote=''):
        super().__init__(issue)
        self.issue = issue
        self.solution = solution
        self.preface = preface
        self.footnote = footnote
        self._message_fmt = "\n{preface}\n{problem}\n\n{solution}\n\n{footnote}"

    @property
    def message(self):
        return self._message_fmt.format(
            preface  = self.preface,
            problem  = self._pretty_wrap(self.issue,    "  Problem:"),
            solution = self._pretty_wrap(self.solution, "  Solution:"),
            footnote = self.footnote
        )

    @property
    def message_no_format(self):
        return self._message_fmt.format(
            preface  = self.preface,
            problem  = self._pretty_wrap(self.issue,    "  Problem:", width=None),
            solution = self._pretty_wrap(self.solution, "  Solution:", width=None),
            footnote = self.footnote
        )

    @staticmethod
    def _pretty_wrap(text, pretext, *, width=-1):
        if width is None:
            return '\n'.join((pretext.strip(), text))
        elif width == -1:
            pretext = pretext.rstrip() + '\n'
            width = shutil.get_terminal_size().columns

        lines = textwrap.wrap(text, width=width - 5)
        lines = (('    ' + line).rstrip().ljust(width-1).rstrip() + '\n' for line in lines)

        return pretext + ''.join(lines).rstrip()
