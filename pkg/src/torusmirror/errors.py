"""Exception hierarchy shared by all modules.

Every domain failure is a DomainError so the CLI can map it to exit code 1
with a machine-readable payload; anything else is a bug or a parse problem.
"""


class DomainError(Exception):
    """Base class for expected, input-dependent failures."""

    code = "domain-error"

    def payload(self):
        return {"error": self.code, "detail": str(self)}


class SingularMatrix(DomainError):
    code = "singular-matrix"


class NotSymmetric(DomainError):
    code = "not-symmetric"


class NotSkew(DomainError):
    code = "not-skew"


class Degenerate(DomainError):
    code = "degenerate"


class NotComplexStructure(DomainError):
    code = "not-complex-structure"


class NotNSForm(DomainError):
    code = "not-ns-form"


class Block12Singular(DomainError):
    code = "block12-singular"


class NotEven(DomainError):
    code = "not-even"


class NotSpin(DomainError):
    code = "not-spin"


class NoIntertwiner(DomainError):
    code = "no-intertwiner"


class MixedParity(DomainError):
    code = "mixed-parity"


class NoHardLefschetz(DomainError):
    code = "no-hard-lefschetz"


class FormMismatch(DomainError):
    code = "form-mismatch"


class IntertwineFailure(DomainError):
    code = "intertwine-failure"


class NotABasis(DomainError):
    code = "not-a-basis"


class NotIsotropic(DomainError):
    code = "not-isotropic"


class NotInvariant(DomainError):
    code = "not-invariant"


class TransversalityNotFound(DomainError):
    code = "transversality-not-found"


class DifferentSource(DomainError):
    code = "different-source"


class NotInvertible(DomainError):
    code = "not-invertible"
