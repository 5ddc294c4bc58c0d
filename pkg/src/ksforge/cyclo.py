"""Exact arithmetic over the 12th cyclotomic field and projective rays.

Every number is a Q-linear combination of 1, z, z^2, z^3 where z is a
primitive 12th root of unity (minimal polynomial x^4 - x^2 + 1).  This one
ring contains both the cube root of unity w = z^4 = z^2 - 1 and the fourth
root i = z^3, so qutrit and ququart coordinates share a single exact
arithmetic.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union


class KsForgeError(Exception):
    """Base class for all library errors."""


class InvalidInputError(KsForgeError):
    """Malformed or out-of-contract input."""


class DegenerateInputError(KsForgeError):
    """Input is structurally degenerate (e.g. dependent vectors)."""


# z^e expressed in the basis (1, z, z^2, z^3), e = 0..11.
_ZETA_POW = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (-1, 0, 0, 0),
    (0, -1, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, -1),
    (1, 0, -1, 0),
    (0, 1, 0, -1),
)

IntLike = Union[int, Fraction, "CycloNum"]


class CycloNum:
    """Immutable element of Q(z), z = primitive 12th root of unity.

    Stored as four integer coordinates over (1, z, z^2, z^3) plus a positive
    common denominator, always reduced (gcd of the five integers is 1).
    """

    __slots__ = ("coeffs", "den")

    def __init__(self, coeffs: Sequence[int], den: int = 1, _reduced: bool = False):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        c0, c1, c2, c3 = coeffs
        if _reduced:
            self.coeffs = (c0, c1, c2, c3)
            self.den = den
            return
        if den < 0:
            c0, c1, c2, c3, den = -c0, -c1, -c2, -c3, -den
        g = gcd(gcd(gcd(abs(c0), abs(c1)), gcd(abs(c2), abs(c3))), den)
        if g > 1:
            c0, c1, c2, c3, den = c0 // g, c1 // g, c2 // g, c3 // g, den // g
        self.coeffs = (c0, c1, c2, c3)
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "CycloNum":
        return CycloNum((n, 0, 0, 0))

    @staticmethod
    def rational(num: int, den: int = 1) -> "CycloNum":
        return CycloNum((num, 0, 0, 0), den)

    @staticmethod
    def coerce(x: IntLike) -> "CycloNum":
        if isinstance(x, CycloNum):
            return x
        if isinstance(x, int):
            return CycloNum.from_int(x)
        if isinstance(x, Fraction):
            return CycloNum.rational(x.numerator, x.denominator)
        raise InvalidInputError(f"cannot coerce {x!r} to CycloNum")

    # -- ring/field operations --------------------------------------------

    def __add__(self, other: IntLike) -> "CycloNum":
        o = CycloNum.coerce(other)
        a, b = self.coeffs, o.coeffs
        da, db = self.den, o.den
        return CycloNum(tuple(x * db + y * da for x, y in zip(a, b)), da * db)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(tuple(-c for c in self.coeffs), self.den, _reduced=True)

    def __sub__(self, other: IntLike) -> "CycloNum":
        return self + (-CycloNum.coerce(other))

    def __rsub__(self, other: IntLike) -> "CycloNum":
        return CycloNum.coerce(other) + (-self)

    def __mul__(self, other: IntLike) -> "CycloNum":
        o = CycloNum.coerce(other)
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = o.coeffs
        # convolution of degree-3 polynomials, then reduction by
        # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        c4 = a1 * b3 + a2 * b2 + a3 * b1
        c5 = a2 * b3 + a3 * b2
        c6 = a3 * b3
        return CycloNum(
            (c0 - c4 - c6, c1 - c5, c2 + c4, c3 + c5), self.den * o.den
        )

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycloNum":
        """Field automorphism z -> z^k for k coprime to 12."""
        if gcd(k, 12) != 1:
            raise InvalidInputError("automorphism index must be coprime to 12")
        out = [0, 0, 0, 0]
        for j, c in enumerate(self.coeffs):
            if c:
                img = _ZETA_POW[(j * k) % 12]
                for t in range(4):
                    out[t] += c * img[t]
        return CycloNum(tuple(out), self.den)

    def conj(self) -> "CycloNum":
        """Complex conjugation, the automorphism z -> z^11."""
        return self.galois(11)

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # product of the three nontrivial Galois images; times self it is the
        # field norm, a nonzero rational.
        adj = self.galois(5) * self.galois(7) * self.galois(11)
        norm = self * adj
        if not norm.is_rational():
            raise AssertionError("field norm must be rational")
        p, q = norm.coeffs[0], norm.den
        return adj * CycloNum.rational(q, p)

    def __truediv__(self, other: IntLike) -> "CycloNum":
        return self * CycloNum.coerce(other).inverse()

    def __rtruediv__(self, other: IntLike) -> "CycloNum":
        return CycloNum.coerce(other) * self.inverse()

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.coeffs == (0, 0, 0, 0)

    def is_rational(self) -> bool:
        return self.coeffs[1] == self.coeffs[2] == self.coeffs[3] == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInputError(f"{self} is not rational")
        return Fraction(self.coeffs[0], self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycloNum)):
            o = CycloNum.coerce(other)
            return self.coeffs == o.coeffs and self.den == o.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def key(self) -> tuple:
        """Total-order key; arbitrary but deterministic."""
        return self.coeffs + (self.den,)

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"CycloNum({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        # prefer the compact forms used by the source tables: q, q*w, q*w2, q*i
        for sym, basis_vec in _PRETTY_BASIS:
            q = self._rational_ratio(basis_vec)
            if q is not None:
                if sym == "1":
                    return _fmt_q(q)
                coef = _fmt_q(q)
                if coef == "1":
                    return sym
                if coef == "-1":
                    return "-" + sym
                return f"{coef}{sym}"
        terms = []
        for c, name in zip(self.coeffs, ("", "z", "z2", "z3")):
            if not c:
                continue
            piece = f"{c}" if not name else (f"{c}*{name}" if abs(c) != 1 else ("-" + name if c < 0 else name))
            terms.append(piece)
        body = "+".join(terms).replace("+-", "-")
        return body if self.den == 1 else f"({body})/{self.den}"

    def _rational_ratio(self, basis_vec: tuple) -> Fraction | None:
        """Return q with self = q * basis_vec, or None."""
        ratio = None
        for c, b in zip(self.coeffs, basis_vec):
            if b == 0:
                if c != 0:
                    return None
            else:
                r = Fraction(c, b * self.den)
                if ratio is None:
                    ratio = r
                elif ratio != r:
                    return None
        return ratio


# (symbol, coordinates over (1, z, z^2, z^3)); checked in order
_PRETTY_BASIS = (
    ("1", (1, 0, 0, 0)),
    ("w", (-1, 0, 1, 0)),
    ("w2", (0, 0, -1, 0)),
    ("i", (0, 0, 0, 1)),
    ("iw", (0, -1, 0, 0)),  # i*w = z^7 = -z
    ("iw2", (0, 1, 0, -1)),  # i*w^2 = z^11
    ("z", (0, 1, 0, 0)),
)


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


ZERO = CycloNum.from_int(0)
ONE = CycloNum.from_int(1)
TWO = CycloNum.from_int(2)
ZETA = CycloNum((0, 1, 0, 0))
I = CycloNum((0, 0, 0, 1))
OMEGA = CycloNum((-1, 0, 1, 0))  # w = z^2 - 1, primitive cube root of unity
OMEGA2 = CycloNum((0, 0, -1, 0))  # w^2 = -z^2


# --------------------------------------------------------------------------
# entry parser for fixture tables: "0", "-2", "w", "-w2", "2w", "i", "-2i"
# --------------------------------------------------------------------------

_SYMBOLS = {
    "": ONE,
    "w": OMEGA,
    "w2": OMEGA2,
    "i": I,
    "iw": I * OMEGA,
    "iw2": I * OMEGA2,
}


def parse_entry(text: str) -> CycloNum:
    """Parse a compact table entry such as '-2w2' or 'i' or '0'."""
    s = text.strip().replace(" ", "")
    if not s:
        raise InvalidInputError("empty entry")
    sign = 1
    if s[0] in "+-":
        if s[0] == "-":
            sign = -1
        s = s[1:]
    digits = ""
    while s and s[0].isdigit():
        digits += s[0]
        s = s[1:]
    if s not in _SYMBOLS:
        raise InvalidInputError(f"cannot parse entry {text!r}")
    mag = int(digits) if digits else 1
    if s == "" and not digits:
        raise InvalidInputError(f"cannot parse entry {text!r}")
    return CycloNum.from_int(sign * mag) * _SYMBOLS[s]


def parse_vector(text: str) -> "CycloVector":
    """Parse '(1,w,-w2)' into a CycloVector."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return CycloVector([parse_entry(tok) for tok in s.split(",")])


# --------------------------------------------------------------------------
# vectors
# --------------------------------------------------------------------------


class CycloVector:
    """Immutable vector over Q(z); dimension 3, 4 or 5 in this library."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[IntLike]):
        self.entries = tuple(CycloNum.coerce(e) for e in entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> CycloNum:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"

    def __add__(self, other: "CycloVector") -> "CycloVector":
        if self.dim != other.dim:
            raise InvalidInputError("dimension mismatch")
        return CycloVector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "CycloVector") -> "CycloVector":
        if self.dim != other.dim:
            raise InvalidInputError("dimension mismatch")
        return CycloVector(a - b for a, b in zip(self.entries, other.entries))

    def scale(self, s: IntLike) -> "CycloVector":
        s = CycloNum.coerce(s)
        return CycloVector(s * e for e in self.entries)

    def __neg__(self) -> "CycloVector":
        return self.scale(-1)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def conj(self) -> "CycloVector":
        return CycloVector(e.conj() for e in self.entries)

    def key(self) -> tuple:
        return tuple(e.key() for e in self.entries)


def inner(v: CycloVector, w: CycloVector) -> CycloNum:
    """Hermitian inner product sum_m conj(v_m) * w_m, exact."""
    if v.dim != w.dim:
        raise InvalidInputError("inner: dimension mismatch")
    acc = ZERO
    for a, b in zip(v.entries, w.entries):
        acc = acc + a.conj() * b
    return acc


def norm_sq(v: CycloVector) -> CycloNum:
    return inner(v, v)


def cross3(u: CycloVector, v: CycloVector) -> CycloVector:
    """Hermitian cross product in dimension 3.

    Componentwise conjugate of the formal cross product; the result is
    orthogonal (in the Hermitian sense) to both arguments.
    """
    if u.dim != 3 or v.dim != 3:
        raise InvalidInputError("cross3 requires dimension 3")
    u1, u2, u3 = u.entries
    v1, v2, v3 = v.entries
    return CycloVector(
        (
            (u2 * v3 - u3 * v2).conj(),
            (u3 * v1 - u1 * v3).conj(),
            (u1 * v2 - u2 * v1).conj(),
        )
    )


def is_orthogonal(v: CycloVector, w: CycloVector) -> bool:
    return inner(v, w).is_zero()


def collinear(v: CycloVector, w: CycloVector) -> bool:
    """True iff v and w span the same ray (all 2x2 minors vanish)."""
    if v.dim != w.dim:
        raise InvalidInputError("collinear: dimension mismatch")
    if v.is_zero() or w.is_zero():
        raise InvalidInputError("collinear is defined for nonzero vectors")
    n = v.dim
    for i in range(n):
        for j in range(i + 1, n):
            if not (v[i] * w[j] - v[j] * w[i]).is_zero():
                return False
    return True


def is_unbiased(v: CycloVector, w: CycloVector) -> bool:
    """Exact mutual-unbiasedness test: D*|<v,w>|^2 == |v|^2 * |w|^2."""
    if v.dim != w.dim:
        raise InvalidInputError("is_unbiased: dimension mismatch")
    if v.is_zero() or w.is_zero():
        raise InvalidInputError("is_unbiased is defined for nonzero vectors")
    ip = inner(v, w)
    lhs = CycloNum.from_int(v.dim) * ip * ip.conj()
    return lhs == norm_sq(v) * norm_sq(w)


# --------------------------------------------------------------------------
# projective rays
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectiveRay:
    """Canonical representative of a ray (1-dimensional subspace).

    canon: scaled so the first nonzero entry is exactly 1.
    pretty: denominator-cleared, content-reduced integer representative
    (collinear with canon; may differ from any printed form by a unit).
    Equality and hashing use canon only.
    """

    canon: CycloVector
    pretty: CycloVector
    id: int = -1
    label: str | None = None

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectiveRay) and self.canon == other.canon

    def __hash__(self) -> int:
        return hash(self.canon)

    def __repr__(self) -> str:
        tag = self.label or self.id
        return f"Ray[{tag}]{self.pretty!r}"


def canonicalize(v: CycloVector, id: int = -1, label: str | None = None) -> ProjectiveRay:
    """Scale v so its first nonzero entry is 1; derive the integer form."""
    pivot = None
    for e in v.entries:
        if not e.is_zero():
            pivot = e
            break
    if pivot is None:
        raise InvalidInputError("cannot canonicalize the zero vector")
    inv = pivot.inverse()
    canon = v.scale(inv)
    return ProjectiveRay(canon=canon, pretty=_integer_form(canon), id=id, label=label)


def _integer_form(v: CycloVector) -> CycloVector:
    lcm = 1
    for e in v.entries:
        lcm = lcm * e.den // gcd(lcm, e.den)
    scaled = v.scale(lcm)
    content = 0
    for e in scaled.entries:
        for c in e.coeffs:
            content = gcd(content, abs(c))
    if content > 1:
        scaled = scaled.scale(Fraction(1, content))
    return scaled


def complement_ray(vs: Sequence[CycloVector]) -> CycloVector:
    """The unique ray orthogonal to D-1 independent vectors in C^D.

    Raises DegenerateInputError when the inputs are linearly dependent (the
    orthogonal complement then has dimension > 1).
    """
    vs = list(vs)
    if not vs:
        raise InvalidInputError("complement_ray needs at least one vector")
    dim = vs[0].dim
    if len(vs) != dim - 1 or any(v.dim != dim for v in vs):
        raise InvalidInputError("complement_ray expects D-1 vectors in C^D")
    from . import linalg

    basis = linalg.nullspace([v.conj() for v in vs])
    if len(basis) != 1:
        raise DegenerateInputError(
            f"inputs span a {dim - 1 - len(basis) + 1}-dimensional space; "
            "orthogonal complement is not a single ray"
        )
    return _integer_form(basis[0])


# --------------------------------------------------------------------------
# JSON encoding ({"c": [...], "d": den}; huge integers as decimal strings)
# --------------------------------------------------------------------------

_I64_MAX = 2**63 - 1


def _enc_int(n: int):
    return str(n) if abs(n) > _I64_MAX else n


def _dec_int(x) -> int:
    return int(x)


def cyclo_to_json(z: CycloNum) -> dict:
    return {"c": [_enc_int(c) for c in z.coeffs], "d": _enc_int(z.den)}


def cyclo_from_json(obj) -> CycloNum:
    if isinstance(obj, dict):
        return CycloNum([_dec_int(c) for c in obj["c"]], _dec_int(obj["d"]))
    if isinstance(obj, int):
        return CycloNum.from_int(obj)
    if isinstance(obj, str):
        return parse_entry(obj)
    raise InvalidInputError(f"cannot decode CycloNum from {obj!r}")


def vector_to_json(v: CycloVector) -> list:
    return [cyclo_to_json(e) for e in v.entries]


def vector_from_json(obj) -> CycloVector:
    if not isinstance(obj, (list, tuple)):
        raise InvalidInputError("vector JSON must be an array")
    return CycloVector([cyclo_from_json(e) for e in obj])
