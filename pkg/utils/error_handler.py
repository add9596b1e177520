"""
Error handling utilities for the edit distance toolkit.
Provides the exception hierarchy, exit-code mapping and the command wrapper
used by every CLI handler.
"""
import logging
import functools
import sys
from typing import Callable, Optional

from config.constants import EXIT_OK, EXIT_DOMAIN_ERROR, EXIT_USAGE_ERROR

logger = logging.getLogger(__name__)


class EdfnError(Exception):
    """Base class for every error raised by the toolkit."""


###############################################################################
#                    DOMAIN ERRORS (exit code 1)
###############################################################################

class DomainError(EdfnError):
    """The input is well formed but the operation is not defined for it."""


class SizeCapError(DomainError):
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has size {size}, above the configured cap {cap}")


class EmptyCrgError(DomainError):
    pass


class EmptyFamilyError(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class NotCoreError(DomainError):
    pass


class InconsistencyError(DomainError):
    pass


class TrivialPropertyError(DomainError):
    pass


class UnsupportedError(DomainError):
    pass


class ExactModeError(DomainError):
    pass


###############################################################################
#                    FORMAT ERRORS (exit code 2)
###############################################################################

class FormatError(EdfnError):
    """An input file or string could not be parsed."""


class Graph6ParseError(FormatError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"graph6 parse error at byte {offset}: {message}")


class CrgFormatError(FormatError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"CRG format error{where}: {message}")


class SpecFormatError(FormatError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"invalid field '{field}': {message}")


class ErrorHandler:
    """Centralized error handling for command execution."""

    @staticmethod
    def exit_code(error: Exception) -> int:
        if isinstance(error, FormatError):
            return EXIT_USAGE_ERROR
        if isinstance(error, DomainError):
            return EXIT_DOMAIN_ERROR
        return EXIT_DOMAIN_ERROR

    @staticmethod
    def get_user_friendly_message(error: Exception) -> str:
        """Convert errors to the single line printed on stderr."""
        if isinstance(error, SizeCapError):
            return f"size limit: {error}"
        elif isinstance(error, FormatError):
            return f"malformed input: {error}"
        elif isinstance(error, DomainError):
            return f"domain error: {error}"
        elif isinstance(error, (OSError, ValueError)):
            return f"input error: {error}"
        else:
            return f"unexpected error: {type(error).__name__}: {error}"

    @staticmethod
    def log_error(operation: str, error: Exception, context: dict = None):
        """Log detailed error information for debugging."""
        context_str = f" Context: {context}" if context else ""
        logger.error(f"Error in {operation}: {type(error).__name__}: {error}{context_str}")

        # Log stack trace for unexpected errors
        if not isinstance(error, (EdfnError, OSError, ValueError)):
            logger.exception(f"Unexpected error in {operation}")


def safe_command(operation: str) -> Callable:
    """
    Decorator for CLI handlers: runs the handler and converts its outcome into
    an exit code, printing a one-line message for failures.

    Args:
        operation: Description of the command for logging
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> int:
            try:
                result = func(*args, **kwargs)
                return EXIT_OK if result is None else int(result)
            except Exception as e:
                ErrorHandler.log_error(operation, e)
                print(ErrorHandler.get_user_friendly_message(e), file=sys.stderr)
                if isinstance(e, (OSError, ValueError)) and not isinstance(e, EdfnError):
                    return EXIT_USAGE_ERROR
                return ErrorHandler.exit_code(e)
        return wrapper

    return decorator
