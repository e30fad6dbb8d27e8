class DatumError(ValueError):
    """Type data that is inconsistent or outside the supported family."""


class UnknownTypeError(DatumError):
    pass


class ExcludedTypeError(DatumError):
    pass


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class ExpressionError(ValueError):
    pass
