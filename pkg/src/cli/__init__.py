# Command-line surface

from .main import parse_input, build_parser, render_text, run, main

__all__ = ['parse_input', 'build_parser', 'render_text', 'run', 'main']
