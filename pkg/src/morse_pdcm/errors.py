"""Exception taxonomy shared by all modules.

Point evaluations that fail for physics/parameter reasons raise a
``DomainError`` subclass.  Grid scans catch ``DomainError`` and record the
``status`` string of the concrete class in the per-cell status column, so
the class names here double as the CSV status vocabulary.
"""


class DomainError(Exception):
    """A point evaluation left the domain where the closed form is defined."""

    status = "DomainError"


class NonFiniteField(DomainError):
    """A field callback produced NaN/Inf on a finite-difference stencil."""

    status = "NonFiniteField"


class MassPositivityViolation(DomainError):
    """m_r <= 0 at the requested point (outside the physical domain)."""

    status = "MassPositivityViolation"


class OverflowSignal(DomainError):
    """A value exceeded the representable/reportable range (|.| > 1e300)."""

    status = "Overflow"


class DegenerateDenominator(DomainError):
    """The well-depth denominator m_r(a_r^2-a_i^2) + 2 m_i a_r a_i vanished."""

    status = "DegenerateDenominator"


class NegativeRadicand(DomainError):
    """The amplitude-squared expression went negative; the point is excluded
    from the real-amplitude solution family."""

    status = "NegativeRadicand"


class NotNormalizable(DomainError):
    """alpha1 <= 0 or beta1 <= 0: the phase-space norm integral diverges."""

    status = "NotNormalizable"


class CaseMismatch(DomainError):
    """A special-case formula was applied to a profile of the wrong kind."""

    status = "CaseMismatch"


class NoRealRoots(DomainError):
    """The imaginary-energy quadratic has a negative discriminant."""

    status = "NoRealRoots"


class DegenerateIdentically(DomainError):
    """All quadratic coefficients vanish: every amplitude is a root."""

    status = "DegenerateIdentically"


class DegenerateLambda2(DomainError):
    """lambda_2 ~ 0: the printed special-case root formula is undefined."""

    status = "DegenerateLambda2"


class NegativeUnderRoot(DomainError):
    """The gamma radicand in a printed special-case root form is negative."""

    status = "NegativeUnderRoot"


class DivisionByZero(DomainError):
    """A printed diagnostic expression divides by a vanishing quantity."""

    status = "DivisionByZero"


class ConfigError(Exception):
    """Bad configuration file or command-line parameters (CLI exit 2)."""


class IoError(Exception):
    """Output files could not be written (CLI exit 3)."""
