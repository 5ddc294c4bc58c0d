"""Symbolic vectors over an unknown center (x_1, ..., x_D).

Gadget constructions are stated identically in the center's coordinates.
This tiny polynomial layer (variables x_j and their conjugates, coefficients
in Q(z)) lets the library verify those identities literally: an inner
product either cancels to 0, or collapses to a linear form in the squared
moduli m_j = x_j * conj(x_j), from which the forcing systems are read off.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .cyclo import ONE, CycloNum, InvalidInputError

# variable token: (index, 0) means x_j, (index, 1) means conj(x_j)
Token = tuple[int, int]
Monomial = tuple[Token, ...]


class Sym:
    """Polynomial in x_j / conj(x_j) with CycloNum coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, CycloNum] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def const(c) -> "Sym":
        c = CycloNum.coerce(c)
        return Sym({(): c}) if not c.is_zero() else Sym()

    @staticmethod
    def var(j: int) -> "Sym":
        return Sym({((j, 0),): ONE})

    @staticmethod
    def varbar(j: int) -> "Sym":
        return Sym({((j, 1),): ONE})

    def __add__(self, other: "Sym") -> "Sym":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, CycloNum.from_int(0)) + c
        return Sym(out)

    def __neg__(self) -> "Sym":
        return Sym({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Sym") -> "Sym":
        return self + (-other)

    def __mul__(self, other) -> "Sym":
        if not isinstance(other, Sym):
            other = Sym.const(other)
        out: dict[Monomial, CycloNum] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                c = c1 * c2
                out[m] = out.get(m, CycloNum.from_int(0)) + c
        return Sym(out)

    __rmul__ = __mul__

    def conj(self) -> "Sym":
        out = {}
        for m, c in self.terms.items():
            mm = tuple(sorted((j, 1 - bar) for j, bar in m))
            out[mm] = c.conj()
        return Sym(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Sym) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            body = "*".join(
                (f"x{j}~" if bar else f"x{j}") for j, bar in m
            )
            parts.append(f"({c})" + ("*" + body if body else ""))
        return " + ".join(parts)


class SymVector:
    """Fixed-length tuple of Sym entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Sym]):
        self.entries = tuple(entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> Sym:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return "(" + ", ".join(repr(e) for e in self.entries) + ")"


def sym_center(dim: int) -> SymVector:
    """The unknown center (x_1, ..., x_D), 1-based variable names."""
    return SymVector(Sym.var(j) for j in range(1, dim + 1))


def sym_inner(v: SymVector, w: SymVector) -> Sym:
    """Hermitian inner product with symbolic entries."""
    if v.dim != w.dim:
        raise InvalidInputError("sym_inner: dimension mismatch")
    acc = Sym()
    for a, b in zip(v.entries, w.entries):
        acc = acc + a.conj() * b
    return acc


def moduli_form(p: Sym, dim: int) -> list[Fraction]:
    """Express p as sum_j c_j * m_j (m_j = x_j conj(x_j)); c_j rational.

    Raises InvalidInputError when p contains any other monomial, i.e. when
    the expression does not reduce to a statement about squared moduli.
    """
    coeffs = [Fraction(0)] * dim
    for m, c in p.terms.items():
        if len(m) != 2 or m[0][0] != m[1][0] or m[0][1] == m[1][1]:
            raise InvalidInputError(f"non-moduli monomial {m} in {p!r}")
        j = m[0][0]
        if not 1 <= j <= dim:
            raise InvalidInputError(f"variable index {j} out of range")
        if not c.is_rational():
            raise InvalidInputError(f"non-rational moduli coefficient {c}")
        coeffs[j - 1] = c.as_fraction()
    return coeffs


def moduli_poly(coeffs: Iterable[int | Fraction]) -> Sym:
    """Build sum_j c_j * m_j for direct comparison against inner products."""
    acc = Sym()
    for j, c in enumerate(coeffs, start=1):
        acc = acc + Sym.const(c) * Sym.var(j) * Sym.varbar(j)
    return acc
