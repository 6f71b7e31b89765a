# -*- coding: utf-8 -*-
"""
Report templates for tree_ramsey.
"""

import os

from jinja2 import Environment, FileSystemLoader, StrictUndefined

TEMPLATE_DIR = os.path.dirname(__file__)

_environment = None


def get_environment() -> Environment:
    global _environment
    if _environment is None:
        _environment = Environment(
            loader=FileSystemLoader(TEMPLATE_DIR),
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
    return _environment


def render(name: str, **context) -> str:
    """Render `<name>.j2` with the given context."""
    return get_environment().get_template(f"{name}.j2").render(**context)
