# Utilities package
# NOTE: version.py is intentionally NOT imported here so it stays importable from
# packaging scripts without pulling in numpy or networkx.
from .error_handler import ErrorHandler, EdfnError, DomainError, FormatError

__all__ = ['ErrorHandler', 'EdfnError', 'DomainError', 'FormatError']
