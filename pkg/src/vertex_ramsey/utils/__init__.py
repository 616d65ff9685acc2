"""Utility modules for the vertex-ramsey toolkit."""

from vertex_ramsey.utils.config import ConfigLoader
from vertex_ramsey.utils.io import ReportWriter, make_document, render
from vertex_ramsey.utils.logging import LoggingMixin, setup_logging

__all__ = [
    "ConfigLoader",
    "ReportWriter",
    "make_document",
    "render",
    "LoggingMixin",
    "setup_logging",
]
