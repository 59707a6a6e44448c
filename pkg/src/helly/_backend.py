"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy
fallback. ``HELLY_BACKEND=python`` forces the fallback.
"""

import importlib
import os

from . import _pykernels


def load(name=None):
    name = name or os.environ.get("HELLY_BACKEND", "auto")
    if name == "python":
        return _pykernels
    try:
        return importlib.import_module("helly._kernels")
    except ImportError:
        if name == "cython":
            raise
        return _pykernels


kernels = load()


def available():
    """Names of the backends importable in this environment."""
    names = ["python"]
    try:
        importlib.import_module("helly._kernels")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


def use(name):
    """Switch the active backend for the whole package (tests, benchmarks)."""
    global kernels
    kernels = load(name)
    return kernels
