"""Command-line interface and the reproduction targets."""

from .main import build_parser, main

__all__ = ["build_parser", "main"]
