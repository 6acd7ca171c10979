"""Exception hierarchy shared by all modules.

The CLI maps these onto process exit codes: anything that means "your
input/config is invalid" exits 2, an exceeded operation budget exits 3.
"""


class KloosumError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(KloosumError):
    """The requested modulus failed the deterministic primality check."""


class Overflow(KloosumError):
    """A modulus outside the supported range (2 < p < 2**31)."""


class ZeroInverse(KloosumError):
    """Modular inverse requested for a residue congruent to zero."""


class DomainError(KloosumError):
    """An argument outside the mathematical domain of the operation."""


class Infeasible(KloosumError):
    """The requested computation exceeds the operation budget."""


class IndexMismatch(KloosumError):
    """Weight vector does not line up with the set it should be indexed by."""


class ConstantPolynomial(KloosumError):
    """A polynomial twist requires degree >= 1."""


class PreconditionFailed(KloosumError):
    """A bound evaluator's hypothesis does not hold for these parameters."""


class ConfigError(KloosumError):
    """Malformed or unparseable configuration file."""


class ValidationError(KloosumError):
    """Structurally valid input that violates an operation's preconditions."""


#: Errors that signal bad user input (CLI exit code 2).
INPUT_ERRORS = (
    NotPrime,
    Overflow,
    ZeroInverse,
    DomainError,
    IndexMismatch,
    ConstantPolynomial,
    PreconditionFailed,
    ConfigError,
    ValidationError,
)
