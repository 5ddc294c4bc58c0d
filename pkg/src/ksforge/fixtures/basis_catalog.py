"""The catalogue of 130 orthogonal bases over the 165-ray catalogue.

Format: ``color:label,label,label`` with color codes r, g, b and m for
mixed (printed black).  Labels refer to the ray catalogue.
"""

_CATALOG = """
m:a11,a21,a31 m:a11,b11,c11 m:a11,b12,c12 m:a11,b13,c13 m:a21,b21,c21 m:a21,b22,c22
m:a21,b23,c23 m:a31,b31,c31 m:a31,b32,c32 m:a31,b33,c33 r:u1,u2,u3 r:u1,c11,d11
r:u1,c21,d21 r:u1,c31,d31 r:u2,c12,d12 r:u2,c22,d22 r:u2,c32,d32 r:u3,c13,d13
r:u3,c23,d23 r:u3,c33,d33 g:u4,u5,u6 m:u4,c11,d14 m:u4,c23,d24 m:u4,c32,d34
m:u5,c12,d15 m:u5,c21,d25 m:u5,c33,d35 m:u6,c13,d16 m:u6,c22,d26 m:u6,c31,d36
b:u7,u8,u9 m:u7,c11,d17 m:u7,c22,d27 m:u7,c33,d37 m:u8,c13,d18 m:u8,c21,d28
m:u8,c32,d38 m:u9,c12,d19 m:u9,c23,d29 m:u9,c31,d39 r:b11,b121,b1121 m:b11,b124,b1124
m:b11,b127,b1127 r:b11,b131,b1131 m:b11,b134,b1134 m:b11,b137,b1137 r:b12,b122,b1122 m:b12,b125,b1125
m:b12,b129,b1129 r:b12,b132,b1132 m:b12,b135,b1135 m:b12,b139,b1139 r:b13,b123,b1123 m:b13,b126,b1126
m:b13,b128,b1128 r:b13,b133,b1133 m:b13,b136,b1136 m:b13,b138,b1138 r:b21,b121,b2121 m:b21,b125,b2125
m:b21,b128,b2128 r:b21,b231,b2231 m:b21,b235,b2235 m:b21,b238,b2238 r:b22,b122,b2122 m:b22,b126,b2126
m:b22,b127,b2127 r:b22,b232,b2232 m:b22,b236,b2236 m:b22,b237,b2237 r:b23,b123,b2123 m:b23,b124,b2124
m:b23,b129,b2129 r:b23,b233,b2233 m:b23,b234,b2234 m:b23,b239,b2239 r:b31,b131,b3131 m:b31,b136,b3136
m:b31,b139,b3139 r:b31,b231,b3231 m:b31,b236,b3236 m:b31,b239,b3239 r:b32,b132,b3132 m:b32,b134,b3134
m:b32,b138,b3138 r:b32,b232,b3232 m:b32,b234,b3234 m:b32,b238,b3238 r:b33,b133,b3133 m:b33,b135,b3135
m:b33,b137,b3137 r:b33,b233,b3233 m:b33,b235,b3235 m:b33,b237,b3237 r:c11,b231,e31 m:c11,b234,e34
m:c11,b237,e37 r:c12,b232,e32 m:c12,b235,e35 m:c12,b239,e39 r:c13,b233,e33 m:c13,b236,e36
m:c13,b238,e38 r:c21,b131,e11 m:c21,b135,e15 m:c21,b138,e18 r:c22,b132,e12 m:c22,b136,e16
m:c22,b137,e17 r:c23,b133,e13 m:c23,b134,e14 m:c23,b139,e19 r:c31,b121,e21 m:c31,b126,e26
m:c31,b129,e29 r:c32,b122,e22 m:c32,b124,e24 m:c32,b128,e28 r:c33,b123,e23 m:c33,b125,e25
m:c33,b127,e27 r:b121,b122,b123 g:b124,b125,b126 b:b127,b128,b129 r:b131,b132,b133 g:b134,b135,b136
b:b137,b138,b139 r:b231,b232,b233 g:b234,b235,b236 b:b237,b238,b239
"""


def _parse():
    out = []
    for token in _CATALOG.split():
        color, labels = token.split(":")
        out.append((color, tuple(labels.split(","))))
    return tuple(out)


#: tuples (color code, (label, label, label))
BASIS_CATALOG = _parse()

assert len(BASIS_CATALOG) == 130
