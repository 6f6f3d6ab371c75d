"""
Command line package.

The Typer application and the batch request handlers behind it.
"""

from .app import app, run
from .batch import run_batch
from .handlers import (
    BatchRecord,
    HandlerRegistry,
    HandlerResult,
    RequestHandler,
    get_handler_registry,
    json_int,
    parse_number,
)

__all__ = [
    "app",
    "run",
    "run_batch",
    "BatchRecord",
    "HandlerRegistry",
    "HandlerResult",
    "RequestHandler",
    "get_handler_registry",
    "json_int",
    "parse_number",
]
