"""Correspondence between the 20-vector gadget and the 18-vector KS set.

CORRESPONDENCE carries the printed comparison rows: gadget label, gadget
vector, 18-set label (None when the ray is absent there), 18-set vector.
The two vector columns agree projectively for every paired row except
``v1423``/``v47``, which the source pairs by structural role, not as equal
rays: the 18-set genuinely contains (1,1,-1,1), not (1,-1,-1,1).

RECONSTRUCTIONS_PRINTED lists the orthocomplement constructions exactly as
printed.  Three of them are defective:

* ``v23`` from {v18, v23, v29}: those three span only a 2-dimensional
  subspace, so the complement is a plane, not a ray.
* ``w13`` from {v12, v23, v58}: independent, but the complement is
  (0,0,0,1), not the stated (0,1,0,1).
* ``w34`` from {v16, v17, v28}: again a 2-dimensional span.

RECONSTRUCTIONS_REPAIRED replaces each defective triple by a minimally
edited one (single label changed) that is independent and yields the stated
target uniquely.  Verification code exercises both lists.
"""

#: label -> printed vector of the 18-vector set
CABELLO_VECTORS = {
    "v56": "(1,1,1,1)",
    "v12": "(1,0,0,0)",
    "v18": "(0,1,0,0)",
    "v28": "(0,0,0,1)",
    "v16": "(0,0,1,-1)",
    "v45": "(0,1,0,-1)",
    "v23": "(0,1,-1,0)",
    "v58": "(1,0,-1,0)",
    "v67": "(1,-1,0,0)",
    "v17": "(0,0,1,1)",
    "v29": "(0,1,1,0)",
    "v39": "(1,0,0,1)",
    "v48": "(1,0,1,0)",
    "v69": "(1,1,-1,-1)",
    "v59": "(1,-1,1,-1)",
    "v47": "(1,1,-1,1)",
    "v34": "(-1,1,1,1)",
    "v37": "(1,1,1,-1)",
}

#: (gadget label, gadget vector, 18-set label or None, 18-set vector or None)
CORRESPONDENCE = (
    ("u", "(1,1,1,1)", "v56", "(1,1,1,1)"),
    ("e1", "(1,0,0,0)", "v12", "(1,0,0,0)"),
    ("e2", "(0,1,0,0)", "v18", "(0,1,0,0)"),
    ("e3", "(0,0,1,0)", None, None),
    ("e4", "(0,0,0,1)", "v28", "(0,0,0,1)"),
    ("v12", "(0,0,1,-1)", "v16", "(0,0,1,-1)"),
    ("v13", "(0,-1,0,1)", "v45", "(0,1,0,-1)"),
    ("v14", "(0,1,-1,0)", "v23", "(0,1,-1,0)"),
    ("v23", "(1,0,0,-1)", None, None),
    ("v24", "(-1,0,1,0)", "v58", "(1,0,-1,0)"),
    ("v34", "(1,-1,0,0)", "v67", "(1,-1,0,0)"),
    ("w12", "(0,0,1,1)", "v17", "(0,0,1,1)"),
    ("w13", "(0,1,0,1)", None, None),
    ("w14", "(0,1,1,0)", "v29", "(0,1,1,0)"),
    ("w23", "(1,0,0,1)", "v39", "(1,0,0,1)"),
    ("w24", "(1,0,1,0)", "v48", "(1,0,1,0)"),
    ("w34", "(1,1,0,0)", None, None),
    ("v1234", "(1,1,-1,-1)", "v69", "(1,1,-1,-1)"),
    ("v1324", "(1,-1,1,-1)", "v59", "(1,-1,1,-1)"),
    ("v1423", "(1,-1,-1,1)", "v47", "(1,1,-1,1)"),
)

#: (side holding the triple, triple labels, target side, target label, target vector)
#: side "c" = 18-set labels, side "g" = gadget labels
RECONSTRUCTIONS_PRINTED = (
    ("c", ("v12", "v18", "v28"), "g", "e3", "(0,0,1,0)"),
    ("c", ("v18", "v23", "v29"), "g", "v23", "(1,0,0,-1)"),
    ("c", ("v12", "v23", "v58"), "g", "w13", "(0,1,0,1)"),
    ("c", ("v16", "v17", "v28"), "g", "w34", "(1,1,0,0)"),
    ("g", ("v12", "v13", "w34"), "c", "v34", "(-1,1,1,1)"),
    ("g", ("v14", "v24", "w23"), "c", "v37", "(1,1,1,-1)"),
)

RECONSTRUCTIONS_REPAIRED = (
    ("c", ("v12", "v18", "v28"), "g", "e3", "(0,0,1,0)"),
    ("c", ("v18", "v23", "v56"), "g", "v23", "(1,0,0,-1)"),
    ("c", ("v12", "v45", "v58"), "g", "w13", "(0,1,0,1)"),
    ("c", ("v16", "v17", "v67"), "g", "w34", "(1,1,0,0)"),
    ("g", ("v12", "v13", "w34"), "c", "v34", "(-1,1,1,1)"),
    ("g", ("v14", "v24", "w23"), "c", "v37", "(1,1,1,-1)"),
)
