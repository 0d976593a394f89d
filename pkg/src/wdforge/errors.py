"""Exception hierarchy shared by every wdforge module."""


class WDForgeError(Exception):
    """Base class; ``code`` is the stable name used in CLI error documents."""

    code = "Error"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details

    def to_dict(self):
        out = {"error": self.code, "message": str(self)}
        out.update(self.details)
        return out


class ReduciblePolynomial(WDForgeError):
    code = "ReduciblePolynomial"


class UnverifiedIrreducibility(WDForgeError):
    code = "UnverifiedIrreducibility"


class UnsupportedField(WDForgeError):
    code = "UnsupportedField"


class FieldMismatch(WDForgeError):
    code = "FieldMismatch"


class ShapeError(WDForgeError):
    code = "ShapeError"


class SingularMatrix(WDForgeError):
    code = "SingularMatrix"


class NonSplitCharPoly(WDForgeError):
    code = "NonSplitCharPoly"

    def __init__(self, message="", factor=None, **details):
        super().__init__(message, **details)
        self.factor = factor


class ValidationFailed(WDForgeError):
    code = "ValidationFailed"

    def __init__(self, report):
        super().__init__("; ".join(report), violations=list(report))
        self.report = list(report)


class WrongRank(WDForgeError):
    code = "WrongRank"


class UnsupportedRank(WDForgeError):
    code = "UnsupportedRank"


class UnsupportedBase(WDForgeError):
    code = "UnsupportedBase"


class NoValuationData(WDForgeError):
    code = "NoValuationData"


class NotMonodromyModule(WDForgeError):
    code = "NotMonodromyModule"


class NotFrobeniusSemisimple(WDForgeError):
    code = "NotFrobeniusSemisimple"


class MixedParameters(WDForgeError):
    code = "MixedParameters"


class IndexOutOfRange(WDForgeError):
    code = "IndexOutOfRange"


class GroupTooLarge(WDForgeError):
    code = "GroupTooLarge"


class SplittingFieldTooLarge(WDForgeError):
    code = "SplittingFieldTooLarge"


class EqualCharacteristic(WDForgeError):
    code = "EqualCharacteristic"


class ZeroEigenvalue(WDForgeError):
    code = "ZeroEigenvalue"


class ZeroParameter(WDForgeError):
    code = "ZeroParameter"


class UnsupportedLocalType(WDForgeError):
    code = "UnsupportedLocalType"


class InvalidInput(WDForgeError):
    code = "InvalidInput"
