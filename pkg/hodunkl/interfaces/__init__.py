"""Interfaces of hodunkl to the outside world."""

from .cli import build_parser, main
