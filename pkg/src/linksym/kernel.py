"""Selects the compiled lattice kernel when built, else the pure fallback.

`linksym.kernel.IMPL` names the active implementation; the benchmark script
compares both on identical inputs.
"""

from __future__ import annotations

try:
    from . import _kernel_c as _impl  # compiled extension, optional

    IMPL = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernel_py as _impl

    IMPL = "pure"

mask_from_indices = _impl.mask_from_indices
indices_from_mask = _impl.indices_from_mask
closure_mask = _impl.closure_mask
all_subgroups_masks = _impl.all_subgroups_masks
conjugacy_classes_masks = _impl.conjugacy_classes_masks


def implementations():
    """Both kernel implementations, for benchmarking; compiled may be absent."""
    from . import _kernel_py

    impls = {"pure": _kernel_py}
    try:
        from . import _kernel_c

        impls["compiled"] = _kernel_c
    except ImportError:
        pass
    return impls
