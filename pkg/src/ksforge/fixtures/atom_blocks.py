"""Two 20-atom block systems sharing one set of 36 two-valued states.

The 10-block system leaves nine state-level exclusions (TIFS pairs)
structurally unaccounted for; the 13-block extension adds the three blocks
that formalize them.
"""

BLOCKS_10 = (
    (1, 4, 20, 17),
    (1, 2, 3, 4),
    (4, 9, 16, 20),
    (20, 19, 18, 17),
    (17, 12, 5, 1),
    (1, 6, 14, 20),
    (4, 7, 13, 17),
    (7, 8, 11, 14),
    (2, 11, 15, 19),
    (12, 11, 10, 9),
)

BLOCKS_13 = BLOCKS_10 + (
    (9, 16, 5, 12),
    (7, 13, 6, 14),
    (2, 3, 18, 19),
)

#: the nine state-derived exclusive pairs of the 10-block system
TIFS_PAIRS_10 = (
    (2, 18),
    (3, 18),
    (3, 19),
    (5, 9),
    (5, 16),
    (6, 7),
    (6, 13),
    (12, 16),
    (13, 14),
)

STATE_COUNT_2010 = 36
