"""cli package init"""

from cli.main import CommandConfig, build_parser, main

__all__ = ["CommandConfig", "build_parser", "main"]
