"""Batch command-line front end and the instance/map text formats."""

from .formats import (
    InputFormatError,
    load_instance,
    load_map,
    parse_instance,
    parse_map,
    serialize_instance,
    serialize_map,
)
from .main import main
from .report import Report

__all__ = [
    "InputFormatError",
    "parse_instance",
    "serialize_instance",
    "parse_map",
    "serialize_map",
    "load_instance",
    "load_map",
    "Report",
    "main",
]
