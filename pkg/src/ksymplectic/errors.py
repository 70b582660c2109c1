"""Exception hierarchy.

Every domain failure derives from :class:`KSymplecticError`; the CLI maps
these to exit status 1 and :class:`SchemaError` to exit status 2.
"""


class KSymplecticError(Exception):
    """Base class for domain errors."""

    code = "error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class DimensionError(KSymplecticError, ValueError):
    code = "DimensionMismatch"


class LevelError(KSymplecticError, ValueError):
    code = "LevelOutOfRange"


class NotSkew(KSymplecticError):
    code = "NotSkew"

    def __init__(self, r):
        self.r = r
        super().__init__(f"form {r} is not skew-symmetric")

    def to_json(self):
        return {**super().to_json(), "form": self.r}


class DegenerateCommonKernel(KSymplecticError):
    code = "DegenerateCommonKernel"

    def __init__(self, kernel):
        self.kernel = kernel
        super().__init__(f"forms share a kernel of dimension {kernel.dim}")

    def to_json(self):
        return {**super().to_json(), "kernel": self.kernel.to_json()}


class BadDimension(KSymplecticError):
    code = "BadDimension"

    def __init__(self, dim, k):
        self.dim, self.k = dim, k
        super().__init__(f"dimension {dim} is not a multiple of k+1 = {k + 1}")


class MismatchedK(KSymplecticError):
    code = "MismatchedK"


class NotIsotropic(KSymplecticError):
    code = "NotIsotropic"


class PreconditionFailed(KSymplecticError):
    code = "PreconditionFailed"


class ConstructionIncomplete(KSymplecticError):
    code = "ConstructionIncomplete"


class InvariantBroken(KSymplecticError):
    code = "InvariantBroken"


class NotPolarized(KSymplecticError):
    code = "NotPolarized"


class ComplementFailed(KSymplecticError):
    code = "ComplementFailed"


class SingularPhi(KSymplecticError):
    code = "SingularPhi"


class NotIsomorphism(KSymplecticError):
    code = "NotIsomorphism"


class NotClosed(KSymplecticError):
    code = "NotClosed"


class VariableMismatch(KSymplecticError, ValueError):
    code = "VariableMismatch"


class SchemaError(ValueError):
    """Malformed input document (CLI exit status 2)."""
