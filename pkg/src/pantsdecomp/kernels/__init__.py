"""Kernel backend selection.

The compiled extension (_native, built from _native.pyx) is preferred; the
pure-Python module is the fallback. Both expose the same two functions with
identical outputs. `benchmarks/kernel_compare.py` and `pantsdecomp bench
--impl ...` compare the two.
"""

from __future__ import annotations

from pantsdecomp.kernels import pure

try:
    from pantsdecomp.kernels import _native  # type: ignore[attr-defined]
except ImportError:
    _native = None

_default = _native if _native is not None else pure

BACKEND: str = _default.BACKEND_NAME

collinear_naive = _default.collinear_naive
collinear_yao = _default.collinear_yao


def available_backends() -> list[str]:
    names = ["python"]
    if _native is not None:
        names.append("native")
    return names


def get_backend(name: str | None):
    """Resolve a backend module by name: 'auto'/None, 'python', or 'native'."""
    if name in (None, "auto"):
        return _default
    if name == "python":
        return pure
    if name == "native":
        if _native is None:
            raise ValueError("native kernel is not built; reinstall with a C compiler")
        return _native
    raise ValueError(f"unknown kernel backend: {name!r}")
