"""Exception types shared across the package.

Each exception carries a stable ``exit_code`` so the command-line front end
can map failures onto its documented exit status without a lookup table.
"""


class DyndegError(Exception):
    exit_code = 1


class UnsupportedQ(DyndegError, ValueError):
    exit_code = 2


class InvalidIndex(DyndegError, ValueError):
    exit_code = 2


class UnknownDivisor(DyndegError, KeyError):
    exit_code = 2

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown divisor"


class BadPrime(DyndegError, ValueError):
    exit_code = 2


class BadGenerator(DyndegError, ValueError):
    exit_code = 2


class InexactDivision(DyndegError, ArithmeticError):
    exit_code = 3


class NonConvergence(DyndegError, ArithmeticError):
    exit_code = 3


class CrossCheckFailure(DyndegError):
    """An internal consistency check between two computations failed."""

    exit_code = 3

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload or {}


class DegenerateLine(DyndegError, RuntimeError):
    exit_code = 4
