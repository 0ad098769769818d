"""Backend selection for the signed-distance kernels.

The compiled Cython extension is used when importable; otherwise the
pure-numpy module is. Set ``MOTION_MEMORY_BACKEND=pure`` to force the
fallback, or ``=compiled`` to fail loudly when the extension is missing.
Both backends implement identical semantics (see ``pure.py``); the
benchmark in ``benchmarks/compare_backends.py`` times them side by side.
"""

import os

from . import pure

compiled = None
_requested = os.environ.get("MOTION_MEMORY_BACKEND", "auto")
if _requested not in ("auto", "pure", "compiled"):
    raise ImportError(f"unknown MOTION_MEMORY_BACKEND: {_requested!r}")
if _requested != "pure":
    try:
        from . import _speedups as compiled
    except ImportError:
        if _requested == "compiled":
            raise
        compiled = None

_active = compiled if compiled is not None else pure

BACKEND = _active.BACKEND_NAME
NO_OBSTACLE_DISTANCE = pure.NO_OBSTACLE_DISTANCE

sd_batch = _active.sd_batch
sd_grad_fd = _active.sd_grad_fd


def available_backends():
    """Importable kernel modules keyed by name."""
    out = {"pure": pure}
    if compiled is not None:
        out["compiled"] = compiled
    return out
