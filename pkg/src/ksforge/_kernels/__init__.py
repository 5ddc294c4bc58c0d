"""Exhaustive-scan kernel dispatch.

The scan enumerates every 0/1 assignment over n vertices and keeps those
hitting each edge mask exactly once.  A compiled extension covers the hot
loop; a vectorized numpy fallback is selected automatically when the
extension is unavailable (or when KS_FORGE_NO_EXT is set).
"""

from __future__ import annotations

import os

if os.environ.get("KS_FORGE_NO_EXT"):
    from .fallback import scan

    BACKEND = "python"
else:
    try:
        from ._brutescan import scan  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from .fallback import scan

        BACKEND = "python"

__all__ = ["scan", "BACKEND"]
