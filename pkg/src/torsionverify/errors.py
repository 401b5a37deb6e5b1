"""Exception types raised by the verification library."""


class VerifyError(Exception):
    """Base class for every error raised by torsionverify."""


# modular arithmetic
class NonCoprimeModuli(VerifyError):
    pass


class EmptyInput(VerifyError):
    pass


class NotAUnit(VerifyError):
    pass


class MixedModulus(VerifyError):
    pass


# groups
class BoundExceeded(VerifyError):
    pass


class ClosureBoundExceeded(VerifyError):
    pass


class NotADivisor(VerifyError):
    pass


class NotCoprime(VerifyError):
    pass


class DivisibilityViolated(VerifyError):
    pass


class NotInSubgroup(VerifyError):
    pass


class NotSurjective(VerifyError):
    pass


class NotAHomomorphism(VerifyError):
    pass


# polynomials
class NotDivisible(VerifyError):
    pass


class ZeroDerivative(VerifyError):
    pass


class NotSymmetric(VerifyError):
    pass


class NotAPthPower(VerifyError):
    pass


class NotIrreducible(VerifyError):
    pass


# division polynomials / theta
class ZeroLeadingCoefficient(VerifyError):
    pass


class RadicalDegreeMismatch(VerifyError):
    pass


class TwistMismatch(VerifyError):
    pass


class ZeroDiscriminant(VerifyError):
    pass


class PreconditionViolated(VerifyError):
    pass


class BadJInvariant(VerifyError):
    pass


# cardano
class DiscriminantNotSquare(VerifyError):
    pass


class BetaZero(VerifyError):
    pass


# cli
class UnknownSuite(VerifyError):
    pass


class BadParameters(VerifyError):
    pass
