"""nonassoclab Errors"""


class NonAssocLabException(Exception):
    """nonassoclab standard exception."""


class ConfigurationException(NonAssocLabException):
    """Spec file exception."""


class ParseError(ConfigurationException):
    """Spec file could not be parsed, carries the location in the document."""

    def __init__(self, message: str, location: str = "") -> None:
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ScalarFieldMismatch(NonAssocLabException):
    """Exact and float scalars were combined without an explicit conversion."""


class DimensionMismatch(NonAssocLabException):
    """Vector length does not match the dimension of its ring or algebra."""


class NotScalarForm(NonAssocLabException):
    """The self-adjoint part of the ring is larger than R1."""


class UnknownProvenance(NonAssocLabException):
    """No way to construct states for this algebra."""


class WitnessError(NonAssocLabException):
    """Exception which carries a witness or a defect."""

    def __init__(self, message: str, witness=None, defect=None) -> None:
        self.witness = witness
        self.defect = defect
        super().__init__(message)


class NotIdempotent(WitnessError):
    """e o e differs from e."""


class NotOrthogonal(WitnessError):
    """Two events with e o f != 0."""


class NotMinimal(WitnessError):
    """Projection U_e has rank larger than one."""


class NotProportional(WitnessError):
    """U_e f is not a multiple of e."""


class ZeroConditioningEvent(WitnessError):
    """Conditioning on an event with vanishing probability."""


class ConditionNineFails(WitnessError):
    """Some product of e, e', f, f' is not idempotent."""


class NotAssociative(WitnessError):
    """The generated subalgebra is not associative."""


class SpectralError(WitnessError):
    """Spectral resolution is not available."""


class NonAssociativeGenerated(SpectralError):
    """x generates a nonassociative subalgebra."""


class ComplexSpectrum(SpectralError):
    """Minimal polynomial has non-real roots."""


class IdempotentDefect(SpectralError):
    """Lagrange idempotents violate e^2 = e beyond the tolerance."""


class ReconstructionDefect(SpectralError):
    """Square-free spectral data does not reconstruct the element."""


class NormUnavailable(WitnessError):
    """Order-unit norm needs a spectral resolution."""


class CertificatePreconditionError(WitnessError):
    """Inputs of a certificate violate its precondition."""


class NormNotMinusOne(CertificatePreconditionError):
    """alpha* alpha = alpha alpha* = -1 does not hold."""


class NormNotZero(CertificatePreconditionError):
    """alpha* alpha = alpha alpha* = 0 does not hold."""


class NormNotOne(CertificatePreconditionError):
    """alpha* alpha = 1 does not hold."""


class NotScalarHermitian(CertificatePreconditionError):
    """Ring has self-adjoint elements outside R1."""


class SearchBudgetExceeded(NonAssocLabException):
    """Random search finished without a witness."""


class ReplayMismatch(NonAssocLabException):
    """Replayed certificate differs from the stored one."""
