"""Kernel backend selection.

The compiled Cython kernel is preferred when the extension built; the
numpy implementation is the fallback.  Set ``PHASEREC_FORCE_PYTHON=1`` to
force the fallback (used by the backend-agreement tests and the
benchmark).
"""

import os

from . import _numpy

eval_energy_gradient_numpy = _numpy.eval_energy_gradient

if os.environ.get("PHASEREC_FORCE_PYTHON") == "1":
    BACKEND = "python"
    eval_energy_gradient = _numpy.eval_energy_gradient
else:
    try:
        from . import _core

        BACKEND = "compiled"
        eval_energy_gradient = _core.eval_energy_gradient
    except ImportError:
        BACKEND = "python"
        eval_energy_gradient = _numpy.eval_energy_gradient

__all__ = ["BACKEND", "eval_energy_gradient", "eval_energy_gradient_numpy"]
