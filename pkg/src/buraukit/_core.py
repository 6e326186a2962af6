"""Kernel dispatch: compiled int64 kernels when available, Python otherwise.

The compiled path raises OverflowError on any int64 overflow; the
dispatchers here then redo the call with the arbitrary-precision Python
kernels, so results never depend on which backend ran.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

__all__ = ["BACKEND", "available_backends", "use_backend",
           "convolve", "reduce_monic", "mulmod", "matmul_mod"]

BACKEND = "compiled" if _ckernels is not None else "python"
_fast = _ckernels


def available_backends():
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def use_backend(name):
    """Switch the active kernels; returns the previous backend name.

    Meant for benchmarks and tests that compare the two paths.
    """
    global BACKEND, _fast
    if name not in available_backends():
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    previous = BACKEND
    BACKEND = name
    _fast = _ckernels if name == "compiled" else None
    return previous


def _dispatch(name):
    slow = getattr(_pykernels, name)

    def run(*args):
        if _fast is not None:
            try:
                return getattr(_fast, name)(*args)
            except OverflowError:
                pass
        return slow(*args)

    run.__name__ = name
    run.__doc__ = slow.__doc__
    return run


convolve = _dispatch("convolve")
reduce_monic = _dispatch("reduce_monic")
mulmod = _dispatch("mulmod")
matmul_mod = _dispatch("matmul_mod")
