"""The 25-row generation grid: each row function applied to the nine seeds.

One line per row: label, the nine printed output vectors (columns u1..u9),
and the printed count of projectively distinct rays the row produces.
"""

_GRID = """
a1   | (1,0,0) (1,0,0) (1,0,0) (1,0,0) (1,0,0) (1,0,0) (1,0,0) (1,0,0) (1,0,0) | 1
a2   | (0,1,0) (0,1,0) (0,1,0) (0,1,0) (0,1,0) (0,1,0) (0,1,0) (0,1,0) (0,1,0) | 1
a3   | (0,0,1) (0,0,1) (0,0,1) (0,0,1) (0,0,1) (0,0,1) (0,0,1) (0,0,1) (0,0,1) | 1
u    | (1,1,1) (1,w,w2) (1,w2,w) (1,w,w) (1,w2,1) (1,1,w2) (1,w2,w2) (1,w,1) (1,1,w) | 9
b1   | (0,1,1) (0,w,w2) (0,w2,w) (0,w,w) (0,w2,1) (0,1,w2) (0,w2,w2) (0,w,1) (0,1,w) | 3
b2   | (1,0,1) (1,0,w2) (1,0,w) (1,0,w) (1,0,1) (1,0,w2) (1,0,w2) (1,0,1) (1,0,w) | 3
b3   | (1,1,0) (1,w,0) (1,w2,0) (1,w,0) (1,w2,0) (1,1,0) (1,w2,0) (1,w,0) (1,1,0) | 3
c1   | (0,1,-1) (0,w,-w2) (0,w2,-w) (0,w2,-w2) (0,1,-w) (0,w,-1) (0,w,-w) (0,1,-w2) (0,w2,-1) | 3
c2   | (-1,0,1) (-w,0,1) (-w2,0,1) (-w2,0,1) (-1,0,1) (-w,0,1) (-w,0,1) (-1,0,1) (-w2,0,1) | 3
c3   | (1,-1,0) (w2,-1,0) (w,-1,0) (w2,-1,0) (w,-1,0) (1,-1,0) (w,-1,0) (w2,-1,0) (1,-1,0) | 3
d1   | (-2,1,1) (-2,w,w2) (-2,w2,w) (-2,w,w) (-2,w2,1) (-2,1,w2) (-2,w2,w2) (-2,w,1) (-2,1,w) | 9
d2   | (1,-2,1) (w2,-2,w) (w,-2,w2) (w2,-2,1) (w,-2,w) (1,-2,w2) (w,-2,1) (w2,-2,w2) (1,-2,w) | 9
d3   | (1,1,-2) (w,w2,-2) (w2,w,-2) (w2,1,-2) (1,w2,-2) (w,w,-2) (w,1,-2) (1,w,-2) (w2,w2,-2) | 9
b12  | (1,1,-1) (1,w,-w2) (1,w2,-w) (w,w2,-w2) (w,1,-w) (w,w,-1) (w2,w,-w) (w2,1,-w2) (w2,w2,-1) | 9
b13  | (1,-1,1) (1,-w,w2) (1,-w2,w) (w,-w2,w2) (w,-1,w) (w,-w,1) (w2,-w,w) (w2,-1,w2) (w2,-w2,1) | 9
b23  | (-1,1,1) (-1,w,w2) (-1,w2,w) (-w,w2,w2) (-w,1,w) (-w,w,1) (-w2,w,w) (-w2,1,w2) (-w2,w2,1) | 9
e1   | (1,2,1) (w2,2,w) (w,2,w2) (w,2w2,w2) (1,2w2,1) (w2,2w2,w) (w2,2w,w) (1,2w,1) (w,2w,w2) | 9
e2   | (1,1,2) (w,w2,2) (w2,w,2) (w,w2,2w2) (w2,w,2w2) (1,1,2w2) (w2,w,2w) (w,w2,2w) (1,1,2w) | 9
e3   | (2,1,1) (2,w,w2) (2,w2,w) (2w2,1,1) (2w2,w,w2) (2w2,w2,w) (2w,1,1) (2w,w2,w) (2w,w,w2) | 9
b112 | (2,-1,1) (2,-w,w2) (2,-w2,w) (2,-w,w) (2,-w2,1) (2,-1,w2) (2,-w2,w2) (2,-w,1) (2,-1,w) | 9
b212 | (-1,2,1) (-1,2w,w2) (-1,2w2,w) (-1,2w,w) (-1,2w2,1) (-1,2,w2) (-1,2w2,w2) (-1,2w,1) (-1,2,w) | 9
b113 | (2,1,-1) (2,w,-w2) (2,w2,-w) (2,w,-w) (2,w2,-1) (2,1,-w2) (2,w2,-w2) (2,w,-1) (2,1,-w) | 9
b313 | (-1,1,2) (-1,w,2w2) (-1,w2,2w) (-1,w,2w) (-1,w2,2) (-1,1,2w2) (-1,w2,2w2) (-1,w,2) (-1,1,2w) | 9
b223 | (1,2,-1) (1,2w,-w2) (1,2w2,-w) (1,2w,-w) (1,2w2,-1) (1,2,-w2) (1,2w2,-w2) (1,2w,-1) (1,2,-w) | 9
b323 | (1,-1,2) (1,-w,2w2) (1,-w2,2w) (1,-w,2w) (1,-w2,2) (1,-1,2w2) (1,-w2,2w2) (1,-w,2) (1,-1,2w) | 9
"""


def _parse():
    cells = {}
    counts = {}
    order = []
    for line in _GRID.strip().splitlines():
        label, body, count = (part.strip() for part in line.split("|"))
        order.append(label)
        counts[label] = int(count)
        vecs = body.split()
        assert len(vecs) == 9, label
        for seed, text in enumerate(vecs, start=1):
            cells[(label, seed)] = text
    return cells, counts, tuple(order)


GRID_CELLS, GRID_COUNTS, ROW_ORDER = _parse()
