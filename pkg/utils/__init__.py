from .errors import ContractError, DatumError, ExcludedTypeError, ExpressionError, UnknownTypeError
from .expressions import parse_expression, parse_weyl_expression
from .helpers import format_fraction, parse_int_list

__all__ = [
    'ContractError',
    'DatumError',
    'ExcludedTypeError',
    'ExpressionError',
    'UnknownTypeError',
    'parse_expression',
    'parse_weyl_expression',
    'format_fraction',
    'parse_int_list'
]
