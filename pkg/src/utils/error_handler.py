"""
Error handling framework for the DRG evaluation toolkit.
"""

import logging
from functools import wraps
from typing import Any, Callable, Optional, Type

from rich.console import Console
from rich.logging import RichHandler

from config.constants import ERROR_MESSAGES

console = Console(stderr=True)

logger = logging.getLogger(__name__)


def configure_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """Configure root logging once: rich output on stderr, plus an optional plain log file."""
    handlers: list[logging.Handler] = [
        RichHandler(console=console, show_path=False, rich_tracebacks=True)
    ]
    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(
            logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        )
        handlers.append(file_handler)

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(message)s",
        datefmt="[%X]",
        handlers=handlers,
        force=True,
    )


class DrgEvalError(Exception):
    """Base exception for all toolkit errors."""

    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[dict] = None):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class SbnSyntaxError(DrgEvalError):
    """Raised when an SBN document cannot be tokenized or parsed."""

    def __init__(self, code: str, position: int, token: Optional[str] = None, message: Optional[str] = None):
        if message is None:
            message = ERROR_MESSAGES.get(code, code).format(position=position, token=token)
        super().__init__(message, code)
        self.position = position
        self.token = token
        self.details["position"] = position
        if token is not None:
            self.details["token"] = token


class UnterminatedLiteral(SbnSyntaxError):
    def __init__(self, position: int):
        super().__init__("UNTERMINATED_LITERAL", position)


class UnknownToken(SbnSyntaxError):
    def __init__(self, token: str, position: int):
        super().__init__("UNKNOWN_TOKEN", position, token)


class DanglingNodeRef(SbnSyntaxError):
    def __init__(self, token: str, position: int):
        super().__init__("DANGLING_NODE_REF", position, token)


class DanglingBoxRef(SbnSyntaxError):
    def __init__(self, token: str, position: int):
        super().__init__("DANGLING_BOX_REF", position, token)


class OddEdgeTokens(SbnSyntaxError):
    def __init__(self, token: str, position: int):
        super().__init__("ODD_EDGE_TOKENS", position, token)


class EmptyDocument(SbnSyntaxError):
    def __init__(self):
        super().__init__("EMPTY_DOCUMENT", 0)


class NotSerializableError(DrgEvalError):
    """Raised when a DRG cannot be written back as SBN."""

    def __init__(self, node: str, reason: str):
        super().__init__(f"Cannot serialize {node}: {reason}", "NOT_SERIALIZABLE")
        self.node = node
        self.reason = reason
        self.details.update({"node": node, "reason": reason})


class PenmanParseError(DrgEvalError):
    """Raised when Penman text does not follow the toolkit's own rendering."""

    def __init__(self, reason: str):
        super().__init__(f"Cannot read Penman text: {reason}", "PENMAN_PARSE")
        self.details["reason"] = reason


class UnknownCategoryError(DrgEvalError):
    """Raised when a triple category to strip is not recognised."""

    def __init__(self, category: str):
        message = ERROR_MESSAGES["UNKNOWN_CATEGORY"].format(category=category)
        super().__init__(message, "UNKNOWN_CATEGORY")
        self.category = category
        self.details["category"] = category


class TooLargeError(DrgEvalError):
    """Raised when the exhaustive matcher is asked to enumerate too many variables."""

    def __init__(self, size: int, max_vars: int):
        message = ERROR_MESSAGES["TOO_LARGE"].format(size=size, max_vars=max_vars)
        super().__init__(message, "TOO_LARGE")
        self.size = size
        self.max_vars = max_vars
        self.details.update({"size": size, "max_vars": max_vars})


class LengthMismatchError(DrgEvalError):
    """Raised when prediction and gold corpora differ in length."""

    def __init__(self, pred: int, gold: int):
        message = ERROR_MESSAGES["LENGTH_MISMATCH"].format(pred=pred, gold=gold)
        super().__init__(message, "LENGTH_MISMATCH")
        self.pred = pred
        self.gold = gold
        self.details.update({"pred": pred, "gold": gold})


class EmptyCorpusError(DrgEvalError):
    """Raised when training is attempted on an empty parallel corpus."""

    def __init__(self, what: str = "parallel corpus"):
        super().__init__(f"Cannot train on an empty {what}", "EMPTY_CORPUS")


class SpanOutOfRangeError(DrgEvalError):
    """Raised when a name span lies outside its sentence."""

    def __init__(self, name: str, start: int, end: int, length: int):
        message = f"Span [{start}, {end}) of '{name}' is outside a sentence of {length} tokens"
        super().__init__(message, "SPAN_OUT_OF_RANGE")
        self.details.update({"name": name, "start": start, "end": end, "length": length})


class IdMismatchError(DrgEvalError):
    """Raised when parallel sentences and SBN documents do not line up."""

    def __init__(self, index: int, sentence_id: str, document_id: str):
        message = f"Sentence {index} has id '{sentence_id}' but document has id '{document_id}'"
        super().__init__(message, "ID_MISMATCH")
        self.details.update({"index": index, "sentence_id": sentence_id, "document_id": document_id})


class CorpusFormatError(DrgEvalError):
    """Raised when a TSV or corpus file is malformed."""

    def __init__(self, path: str, line: int, reason: str):
        message = f"{path}:{line}: {reason}"
        super().__init__(message, "CORPUS_FORMAT")
        self.path = path
        self.line = line
        self.details.update({"path": path, "line": line, "reason": reason})


class ValidationError(DrgEvalError):
    """Raised when a parameter value is outside its allowed range."""

    def __init__(self, field: str, value: Any, reason: str):
        message = f"Validation failed for {field} = '{value}': {reason}"
        super().__init__(message, "VALIDATION_ERROR")
        self.field = field
        self.value = value
        self.reason = reason
        self.details.update({
            "field": field,
            "value": value,
            "reason": reason
        })


def log_error(error: Exception, level: str = "ERROR") -> None:
    """Log an error with appropriate level and formatting."""
    if isinstance(error, DrgEvalError):
        details_str = ", ".join([f"{k}={v}" for k, v in error.details.items()])
        log_message = f"{error.message}"
        if details_str:
            log_message += f" (Details: {details_str})"
    else:
        log_message = str(error)

    level = level.upper()
    if level == "DEBUG":
        logger.debug(log_message, exc_info=True)
    elif level == "INFO":
        logger.info(log_message)
    elif level == "WARNING":
        logger.warning(log_message)
    elif level == "CRITICAL":
        logger.critical(log_message, exc_info=True)
    else:
        logger.error(log_message)


def display_error(error: Exception, show_details: bool = True) -> None:
    """Display an error on stderr using rich console formatting."""
    if isinstance(error, DrgEvalError):
        console.print(f"[red]Error: {error.message}[/red]", markup=True, highlight=False)
        if show_details and error.details:
            console.print(f"[yellow]Details: {error.details}[/yellow]", highlight=False)
    else:
        console.print(f"[red]Unexpected error: {str(error)}[/red]", highlight=False)


def create_error_context(
    operation: str,
    error_class: Type[DrgEvalError] = DrgEvalError
) -> Callable:
    """
    Decorator wrapping foreign exceptions raised during an operation.

    Args:
        operation: Description of the operation being performed
        error_class: Custom error class to use; must accept (message, error_code)
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except DrgEvalError:
                raise
            except Exception as e:
                raise error_class(
                    f"Failed to {operation}: {str(e)}",
                    f"{operation.upper().replace(' ', '_')}_FAILED"
                ) from e
        return wrapper
    return decorator


def validate_positive(field: str, value: int, minimum: int = 1) -> None:
    """Validate an integer parameter lower bound."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(field, value, "Must be an integer")
    if value < minimum:
        raise ValidationError(field, value, f"Must be at least {minimum}")
