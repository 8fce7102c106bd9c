"""Command-line front end, report pipeline and batch experiments."""

from .main import main

__all__ = ["main"]
