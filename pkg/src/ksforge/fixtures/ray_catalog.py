"""The catalogue of 165 globally distinct rays with their lineage colors.

Format: one token per ray, ``label=vector/color`` with color codes
k (universal, black in the source), r, g, b.  The trailing digit of each
label is the seed column that produced the printed representative.
"""

_CATALOG = """
a11=(1,0,0)/k a21=(0,1,0)/k a31=(0,0,1)/k u1=(1,1,1)/r u2=(1,w,w2)/r u3=(1,w2,w)/r
u4=(1,w,w)/g u5=(1,w2,1)/g u6=(1,1,w2)/g u7=(1,w2,w2)/b u8=(1,w,1)/b u9=(1,1,w)/b
b11=(0,1,1)/r b12=(0,w,w2)/r b13=(0,w2,w)/r b21=(1,0,1)/r b22=(1,0,w2)/r b23=(1,0,w)/r
b31=(1,1,0)/r b32=(1,w,0)/r b33=(1,w2,0)/r c11=(0,1,-1)/r c12=(0,w,-w2)/r c13=(0,w2,-w)/r
c21=(-1,0,1)/r c22=(-w,0,1)/r c23=(-w2,0,1)/r c31=(1,-1,0)/r c32=(w2,-1,0)/r c33=(w,-1,0)/r
d11=(-2,1,1)/r d12=(-2,w,w2)/r d13=(-2,w2,w)/r d14=(-2,w,w)/g d15=(-2,w2,1)/g d16=(-2,1,w2)/g
d17=(-2,w2,w2)/b d18=(-2,w,1)/b d19=(-2,1,w)/b d21=(1,-2,1)/r d22=(w2,-2,w)/r d23=(w,-2,w2)/r
d24=(w2,-2,1)/g d25=(w,-2,w)/g d26=(1,-2,w2)/g d27=(w,-2,1)/b d28=(w2,-2,w2)/b d29=(1,-2,w)/b
d31=(1,1,-2)/r d32=(w,w2,-2)/r d33=(w2,w,-2)/r d34=(w2,1,-2)/g d35=(1,w2,-2)/g d36=(w,w,-2)/g
d37=(w,1,-2)/b d38=(1,w,-2)/b d39=(w2,w2,-2)/b b121=(1,1,-1)/r b122=(1,w,-w2)/r b123=(1,w2,-w)/r
b124=(w,w2,-w2)/g b125=(w,1,-w)/g b126=(w,w,-1)/g b127=(w2,w,-w)/b b128=(w2,1,-w2)/b b129=(w2,w2,-1)/b
b131=(1,-1,1)/r b132=(1,-w,w2)/r b133=(1,-w2,w)/r b134=(w,-w2,w2)/g b135=(w,-1,w)/g b136=(w,-w,1)/g
b137=(w2,-w,w)/b b138=(w2,-1,w2)/b b139=(w2,-w2,1)/b b231=(-1,1,1)/r b232=(-1,w,w2)/r b233=(-1,w2,w)/r
b234=(-w,w2,w2)/g b235=(-w,1,w)/g b236=(-w,w,1)/g b237=(-w2,w,w)/b b238=(-w2,1,w2)/b b239=(-w2,w2,1)/b
e11=(1,2,1)/r e12=(w2,2,w)/r e13=(w,2,w2)/r e14=(w,2w2,w2)/g e15=(1,2w2,1)/g e16=(w2,2w2,w)/g
e17=(w2,2w,w)/b e18=(1,2w,1)/b e19=(w,2w,w2)/b e21=(1,1,2)/r e22=(w,w2,2)/r e23=(w2,w,2)/r
e24=(w,w2,2w2)/g e25=(w2,w,2w2)/g e26=(1,1,2w2)/g e27=(w2,w,2w)/b e28=(w,w2,2w)/b e29=(1,1,2w)/b
e31=(2,1,1)/r e32=(2,w,w2)/r e33=(2,w2,w)/r e34=(2w2,1,1)/g e35=(2w2,w,w2)/g e36=(2w2,w2,w)/g
e37=(2w,1,1)/b e38=(2w,w2,w)/b e39=(2w,w,w2)/b b1121=(2,-1,1)/r b1122=(2,-w,w2)/r b1123=(2,-w2,w)/r
b1124=(2,-w,w)/g b1125=(2,-w2,1)/g b1126=(2,-1,w2)/g b1127=(2,-w2,w2)/b b1128=(2,-w,1)/b b1129=(2,-1,w)/b
b2121=(-1,2,1)/r b2122=(-1,2w,w2)/r b2123=(-1,2w2,w)/r b2124=(-1,2w,w)/g b2125=(-1,2w2,1)/g b2126=(-1,2,w2)/g
b2127=(-1,2w2,w2)/b b2128=(-1,2w,1)/b b2129=(-1,2,w)/b b1131=(2,1,-1)/r b1132=(2,w,-w2)/r b1133=(2,w2,-w)/r
b1134=(2,w,-w)/g b1135=(2,w2,-1)/g b1136=(2,1,-w2)/g b1137=(2,w2,-w2)/b b1138=(2,w,-1)/b b1139=(2,1,-w)/b
b3131=(-1,1,2)/r b3132=(-1,w,2w2)/r b3133=(-1,w2,2w)/r b3134=(-1,w,2w)/g b3135=(-1,w2,2)/g b3136=(-1,1,2w2)/g
b3137=(-1,w2,2w2)/b b3138=(-1,w,2)/b b3139=(-1,1,2w)/b b2231=(1,2,-1)/r b2232=(1,2w,-w2)/r b2233=(1,2w2,-w)/r
b2234=(1,2w,-w)/g b2235=(1,2w2,-1)/g b2236=(1,2,-w2)/g b2237=(1,2w2,-w2)/b b2238=(1,2w,-1)/b b2239=(1,2,-w)/b
b3231=(1,-1,2)/r b3232=(1,-w,2w2)/r b3233=(1,-w2,2w)/r b3234=(1,-w,2w)/g b3235=(1,-w2,2)/g b3236=(1,-1,2w2)/g
b3237=(1,-w2,2w2)/b b3238=(1,-w,2)/b b3239=(1,-1,2w)/b
"""


def _parse():
    out = []
    for token in _CATALOG.split():
        head, color = token.rsplit("/", 1)
        label, vec = head.split("=")
        out.append((label, vec, color))
    return tuple(out)


#: tuples (label, vector string, color code)
RAY_CATALOG = _parse()

assert len(RAY_CATALOG) == 165
