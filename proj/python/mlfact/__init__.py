"""Torsion theories and monotone-light factorisation systems.

Python front end for the C++ core: load structure and morphism files in the
tool's text formats, select a torsion context by tag (``ab``,
``finab:p=<prime>``, ``fingrp``, ``finring``, ``xmod``), and run
factorisations, classification, and verification checks.
"""

import os
import sys

_ext_dir = os.environ.get("MLFACT_EXT_DIR")
if _ext_dir and _ext_dir not in sys.path:
    sys.path.insert(0, _ext_dir)

from _core import (  # noqa: E402,F401
    Context,
    ContextError,
    Morphism,
    Object,
    ParseError,
    UnsupportedError,
    make_context,
    parse_object,
    read_morphism,
    read_object,
)

__all__ = [
    "Context",
    "ContextError",
    "Morphism",
    "Object",
    "ParseError",
    "UnsupportedError",
    "make_context",
    "parse_object",
    "read_morphism",
    "read_object",
]
