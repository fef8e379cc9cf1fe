"""Exception types shared across the package.

Everything derives from KaprekarError so callers can catch broadly; the
usage-style errors also derive from ValueError.
"""


class KaprekarError(Exception):
    """Base class for all errors raised by this package."""


class BadRadix(KaprekarError, ValueError):
    """Base outside the supported range [2, 64]."""


class WidthTooSmall(KaprekarError, ValueError):
    """Digit width below 2; single-digit strings are not part of the domain."""


class ValueTooWide(KaprekarError, ValueError):
    """Integer does not fit in the requested number of digits."""


class ZeroRange(KaprekarError, ValueError):
    """Digit range D = 0 (repdigit); the three-digit closed form is undefined."""


class OddBase(KaprekarError, ValueError):
    """No three-digit constant exists for odd bases."""


class UnsupportedBase(KaprekarError, ValueError):
    """No known closed-form constant for this base/width combination."""


class RepdigitInput(KaprekarError, ValueError):
    """Repdigits are excluded from analysis domains (they collapse to zero)."""


class TableTooSmall(KaprekarError, ValueError):
    """Pattern verification needs at least 4 table rows."""


class StateSpaceTooLarge(KaprekarError):
    """Encoded state count exceeds the build guard."""


class StepLimitExceeded(KaprekarError):
    """Orbit did not repeat within the step budget."""
