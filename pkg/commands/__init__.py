from .algebra_commands import AlgebraCommands
from .cartan_commands import CartanCommands
from .verify_commands import VerifyCommands

__all__ = ['AlgebraCommands', 'CartanCommands', 'VerifyCommands']
