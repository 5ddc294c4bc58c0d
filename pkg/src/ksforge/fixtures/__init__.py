"""Reference data shipped with the library.

These modules carry the printed source catalogues verbatim (in a compact
ASCII notation: w for the cube root of unity, w2 for its square, i for the
imaginary unit) plus the 20-atom block systems and the gadget/18-vector
correspondence rows.  Tests compare generated structures against them.
"""

from .generation_grid import GRID_CELLS, GRID_COUNTS, ROW_ORDER
from .ray_catalog import RAY_CATALOG
from .basis_catalog import BASIS_CATALOG
from .atom_blocks import BLOCKS_10, BLOCKS_13, TIFS_PAIRS_10, STATE_COUNT_2010
from .equivalence import CABELLO_VECTORS, CORRESPONDENCE, RECONSTRUCTIONS_PRINTED, RECONSTRUCTIONS_REPAIRED

__all__ = [
    "GRID_CELLS",
    "GRID_COUNTS",
    "ROW_ORDER",
    "RAY_CATALOG",
    "BASIS_CATALOG",
    "BLOCKS_10",
    "BLOCKS_13",
    "TIFS_PAIRS_10",
    "STATE_COUNT_2010",
    "CABELLO_VECTORS",
    "CORRESPONDENCE",
    "RECONSTRUCTIONS_PRINTED",
    "RECONSTRUCTIONS_REPAIRED",
]
