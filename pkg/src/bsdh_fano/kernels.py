"""Hot loops used by enumeration, classification and the audit.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is selected.  ``BACKEND`` names
the active one; ``use_backend`` switches at runtime (tests and the
benchmark use it to compare both).
"""
from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_FUNCS = (
    "word_beta",
    "degree_vector",
    "condition_codes",
    "class_codes",
    "right_multiply",
    "column_positive",
    "survey",
)

BACKEND = None


def available_backends():
    return ["python"] + (["cython"] if _ckernels is not None else [])


def use_backend(name):
    """Select ``"cython"`` or ``"python"`` kernels for this process."""
    global BACKEND
    if name == "cython":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        mod = _ckernels
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for f in _FUNCS:
        g[f] = getattr(mod, f)
    BACKEND = name


use_backend("cython" if _ckernels is not None else "python")
