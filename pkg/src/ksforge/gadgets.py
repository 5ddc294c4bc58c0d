"""Higher-dimensional forcing gadgets and the fixed 4-dimensional KS sets.

The D=4 and D=5 gadgets scaffold a center vector u with Levi-Civita minors
and support-complementary partners, then add connector blocks whose
orthogonality conditions collapse to linear equations in the squared moduli
|x_j|^2, forcing the center into maximal unbiasedness.  The fixed sets (the
24-ray eigensystem and the 18-ray KS configuration) live here too, together
with the orthocomplement reconstructions tying them to the gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, Mapping, Sequence

from . import linalg
from .cyclo import (
    ONE,
    ZERO,
    CycloNum,
    CycloVector,
    DegenerateInputError,
    InvalidInputError,
    KsForgeError,
    canonicalize,
    collinear,
    complement_ray,
    inner,
    parse_vector,
)
from .fixtures.equivalence import (
    CABELLO_VECTORS,
    CORRESPONDENCE,
    RECONSTRUCTIONS_PRINTED,
    RECONSTRUCTIONS_REPAIRED,
)
from .hypergraph import ContextHypergraph, enumerate_contexts
from .symbolic import Sym, SymVector, moduli_form, sym_center, sym_inner


class ForcingPreconditionError(KsForgeError):
    """Connector blocks require equal squared moduli of the center."""


class ReconstructionError(KsForgeError):
    """An orthocomplement reconstruction failed (dependent or mismatched)."""


def _sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a tuple of distinct integers."""
    s = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def levi_minor(u: CycloVector, fixed: Sequence[int]) -> CycloVector:
    """Levi-Civita contraction: component m is sum_l eps(m, fixed, l) conj(x_l).

    Indices are 1-based; with D-2 fixed indices the result vanishes on them
    and is orthogonal to u identically.
    """
    d = u.dim
    fixed = tuple(fixed)
    if len(set(fixed)) != len(fixed) or not all(1 <= i <= d for i in fixed):
        raise InvalidInputError("fixed indices must be distinct and in range")
    if len(fixed) != d - 2:
        raise InvalidInputError("a minor fixes exactly D-2 indices")
    comps = []
    for m in range(1, d + 1):
        acc = ZERO
        for last in range(1, d + 1):
            idx = (m, *fixed, last)
            if len(set(idx)) != d:
                continue
            acc = acc + CycloNum.from_int(_sign(idx)) * u[last - 1].conj()
        comps.append(acc)
    return CycloVector(comps)


def _support_partner(u: CycloVector, fixed: Sequence[int]) -> CycloVector:
    """The plain-entry vector on the two coordinates missing from ``fixed``."""
    d = u.dim
    rest = [m for m in range(1, d + 1) if m not in set(fixed)]
    comps = [ZERO] * d
    for m in rest:
        comps[m - 1] = u[m - 1]
    return CycloVector(comps)


# --------------------------------------------------------------------------
# D = 4
# --------------------------------------------------------------------------


def pair_minor(u: CycloVector, i: int, j: int) -> CycloVector:
    """v_ij: zero on coordinates i, j; orthogonal to u identically."""
    _check_center(u, 4)
    if not 1 <= i < j <= 4:
        raise InvalidInputError("need 1 <= i < j <= 4")
    return levi_minor(u, (i, j))


def pair_complement(u: CycloVector, i: int, j: int) -> CycloVector:
    """w_ij: same support as v_ij, orthogonal to it identically."""
    _check_center(u, 4)
    if not 1 <= i < j <= 4:
        raise InvalidInputError("need 1 <= i < j <= 4")
    return _support_partner(u, (i, j))


_CONNECTOR_SIGNS_4 = {
    "v1234": (1, 1, -1, -1),
    "v1324": (1, -1, 1, -1),
    "v1423": (1, -1, -1, 1),
}


def connectors4(u: CycloVector) -> dict[str, CycloVector]:
    """The three sign-flipped copies of u used by the connector blocks."""
    _check_center(u, 4)
    return {
        name: CycloVector(CycloNum.from_int(s) * x for s, x in zip(signs, u.entries))
        for name, signs in _CONNECTOR_SIGNS_4.items()
    }


def _check_center(u: CycloVector, dim: int):
    if u.dim != dim:
        raise InvalidInputError(f"center must have dimension {dim}")
    if any(x.is_zero() for x in u.entries):
        raise InvalidInputError("center entries must all be nonzero")


def _moduli(u: CycloVector) -> list[CycloNum]:
    return [x.conj() * x for x in u.entries]


def _require_equal_moduli(u: CycloVector):
    m = _moduli(u)
    if any(mj != m[0] for mj in m[1:]):
        raise ForcingPreconditionError(
            "connector blocks need |x_1|^2 = ... = |x_D|^2; got "
            + ", ".join(str(x) for x in m)
        )


@dataclass
class GadgetBlocks:
    """A forcing gadget: named vectors plus the constructed block list."""

    dimension: int
    center: CycloVector
    vectors: dict[str, CycloVector]
    blocks: dict[str, tuple[str, ...]]

    @property
    def block_list(self) -> list[tuple[str, ...]]:
        return list(self.blocks.values())

    def verify_blocks(self) -> bool:
        """Exact pairwise orthogonality of every constructed block."""
        for members in self.blocks.values():
            for a, b in combinations(members, 2):
                if not inner(self.vectors[a], self.vectors[b]).is_zero():
                    return False
        return True

    def hypergraph(self, constructed_only: bool = True) -> ContextHypergraph:
        """The gadget as a hypergraph over its projectively distinct rays.

        constructed_only keeps the deliberately constructed block list;
        otherwise every orthogonal D-tuple over the vectors is enumerated.
        """
        names = list(self.vectors)
        rays = {}
        name_to_ray: dict[str, int] = {}
        for name in names:
            key = canonicalize(self.vectors[name]).canon.key()
            if key not in rays:
                rays[key] = len(rays)
            name_to_ray[name] = rays[key]
        id_vec = {}
        for name in names:
            id_vec.setdefault(name_to_ray[name], self.vectors[name])
        if not constructed_only:
            ordered = [id_vec[i] for i in sorted(id_vec)]
            return enumerate_contexts(ordered, self.dimension, meta={"gadget": self.dimension})
        edges = []
        for members in self.blocks.values():
            edges.append(tuple(sorted({name_to_ray[m] for m in members})))
        return ContextHypergraph(
            dimension=self.dimension,
            vertices=tuple(sorted(id_vec)),
            edges=tuple(sorted(set(edges))),
            meta={"gadget": self.dimension, "names": self.ray_names()},
            vectors=id_vec,
        )

    def ray_names(self) -> dict[int, list[str]]:
        """ray id (as used by hypergraph()) -> gadget vector names."""
        out: dict[int, list[str]] = {}
        seen: dict[tuple, int] = {}
        for name, vec in self.vectors.items():
            key = canonicalize(vec).canon.key()
            if key not in seen:
                seen[key] = len(seen)
            out.setdefault(seen[key], []).append(name)
        return out


def build_gadget4(u: CycloVector) -> GadgetBlocks:
    """The 20-vector gadget: rim, pair blocks, connectors, hidden blocks."""
    _check_center(u, 4)
    _require_equal_moduli(u)
    vectors: dict[str, CycloVector] = {"u": u}
    for k in range(4):
        vectors[f"e{k + 1}"] = CycloVector(
            [ONE if m == k else ZERO for m in range(4)]
        )
    pairs = list(combinations(range(1, 5), 2))
    for i, j in pairs:
        vectors[f"v{i}{j}"] = pair_minor(u, i, j)
        vectors[f"w{i}{j}"] = pair_complement(u, i, j)
    vectors.update(connectors4(u))

    blocks: dict[str, tuple[str, ...]] = {
        "comp": ("e1", "e2", "e3", "e4"),
    }
    for i, j in pairs:
        blocks[f"B{i}{j}"] = (f"e{i}", f"e{j}", f"v{i}{j}", f"w{i}{j}")
    blocks["Ca"] = ("u", "v1234", "v34", "v12")
    blocks["Cb"] = ("u", "v1324", "v24", "v13")
    blocks["Cc"] = ("u", "v1423", "v23", "v14")
    blocks["B1234"] = ("v12", "w12", "v34", "w34")
    blocks["B1324"] = ("v13", "w13", "v24", "w24")
    blocks["B1423"] = ("v14", "w14", "v23", "w23")

    gadget = GadgetBlocks(dimension=4, center=u, vectors=vectors, blocks=blocks)
    if not gadget.verify_blocks():
        raise AssertionError("constructed blocks failed exact orthogonality")
    return gadget


def emergent_block(gadget: GadgetBlocks) -> tuple[str, ...]:
    """The extra block materialized by forced unbiasedness (D=4)."""
    members = ("w14", "w23", "v1234", "v1324")
    for a, b in combinations(members, 2):
        if not inner(gadget.vectors[a], gadget.vectors[b]).is_zero():
            raise AssertionError(f"emergent block pair {a},{b} not orthogonal")
    return members


# --------------------------------------------------------------------------
# symbolic counterparts (identity checks and moduli systems)
# --------------------------------------------------------------------------


def sym_gadget_vectors(dim: int) -> dict[str, SymVector]:
    """Symbolic versions of the gadget vectors over an unknown center."""
    if dim == 4:
        x = [Sym.var(j) for j in range(1, 5)]
        xb = [Sym.varbar(j) for j in range(1, 5)]
        zero, one = Sym(), Sym.const(1)
        vecs: dict[str, SymVector] = {"u": SymVector(x)}
        for k in range(4):
            vecs[f"e{k + 1}"] = SymVector([one if m == k else zero for m in range(4)])
        for i, j in combinations(range(1, 5), 2):
            comps_v = []
            comps_w = []
            rest = [m for m in range(1, 5) if m not in (i, j)]
            for m in range(1, 5):
                if m in (i, j):
                    comps_v.append(zero)
                    comps_w.append(zero)
                else:
                    acc = Sym()
                    for last in range(1, 5):
                        idx = (m, i, j, last)
                        if len(set(idx)) == 4:
                            acc = acc + Sym.const(_sign(idx)) * xb[last - 1]
                    comps_v.append(acc)
                    comps_w.append(x[m - 1])
            vecs[f"v{i}{j}"] = SymVector(comps_v)
            vecs[f"w{i}{j}"] = SymVector(comps_w)
        for name, signs in _CONNECTOR_SIGNS_4.items():
            vecs[name] = SymVector([Sym.const(s) * xj for s, xj in zip(signs, x)])
        return vecs
    if dim == 5:
        x = [Sym.var(j) for j in range(1, 6)]
        xb = [Sym.varbar(j) for j in range(1, 6)]
        zero = Sym()
        vecs = {"u": SymVector(x)}
        for i, j, k in combinations(range(1, 6), 3):
            comps_v = []
            comps_w = []
            for m in range(1, 6):
                if m in (i, j, k):
                    comps_v.append(zero)
                    comps_w.append(zero)
                else:
                    acc = Sym()
                    for last in range(1, 6):
                        idx = (m, i, j, k, last)
                        if len(set(idx)) == 5:
                            acc = acc + Sym.const(_sign(idx)) * xb[last - 1]
                    comps_v.append(acc)
                    comps_w.append(x[m - 1])
            vecs[f"v{i}{j}{k}"] = SymVector(comps_v)
            vecs[f"w{i}{j}{k}"] = SymVector(comps_w)
        for g in range(1, 5):
            comps = [zero] * 5
            comps[g - 1] = x[g - 1]
            comps[4] = Sym.const(-1) * x[4]
            vecs[f"g{g}"] = SymVector(comps)
        return vecs
    raise InvalidInputError("symbolic gadgets exist for dimensions 4 and 5")


@dataclass
class ModuliSystem:
    """Homogeneous integer-linear equations in the squared moduli m_j."""

    dimension: int
    equations: tuple[tuple[int, ...], ...]
    sources: tuple[str, ...]

    def nullspace(self) -> list[list[Fraction]]:
        return linalg.rational_nullspace(self.equations)

    def nullspace_primitive(self) -> list[list[int]]:
        return [linalg.primitive_integer(v) for v in self.nullspace()]


def _connector_names(dim: int) -> tuple[str, ...]:
    return tuple(_CONNECTOR_SIGNS_4) if dim == 4 else ("g1", "g2", "g3", "g4")


def forcing_check(dim: int, connectors: Iterable[str] | None = None) -> ModuliSystem:
    """Assemble the moduli system enforced by the connector blocks.

    Each connector c contributes the equation <u, c> = 0, which reduces to
    an integer-linear relation among the m_j.
    """
    vecs = sym_gadget_vectors(dim)
    names = tuple(connectors) if connectors is not None else _connector_names(dim)
    u = vecs["u"]
    rows = []
    for name in names:
        if name not in vecs:
            raise InvalidInputError(f"unknown connector {name!r}")
        coeffs = moduli_form(sym_inner(u, vecs[name]), dim)
        lcm = 1
        for c in coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        rows.append(tuple(int(c * lcm) for c in coeffs))
    return ModuliSystem(dimension=dim, equations=tuple(rows), sources=names)


# --------------------------------------------------------------------------
# D = 5
# --------------------------------------------------------------------------


def triple_minor5(u: CycloVector, i: int, j: int, k: int) -> CycloVector:
    """v_ijk: zero on coordinates i, j, k; orthogonal to u identically."""
    _check_center(u, 5)
    if not (1 <= i < j < k <= 5):
        raise InvalidInputError("need 1 <= i < j < k <= 5")
    return levi_minor(u, (i, j, k))


def g_connectors5(u: CycloVector) -> dict[str, CycloVector]:
    """g_i = x_i at slot i, -x_5 at slot 5 (i = 1..4)."""
    _check_center(u, 5)
    out = {}
    for g in range(1, 5):
        comps = [ZERO] * 5
        comps[g - 1] = u[g - 1]
        comps[4] = -u[4]
        out[f"g{g}"] = CycloVector(comps)
    return out


def build_gadget5(u: CycloVector) -> GadgetBlocks:
    """Ten scaffold blocks plus four connector blocks with exact completions."""
    _check_center(u, 5)
    _require_equal_moduli(u)
    vectors: dict[str, CycloVector] = {"u": u}
    for m in range(5):
        vectors[f"e{m + 1}"] = CycloVector([ONE if t == m else ZERO for t in range(5)])
    blocks: dict[str, tuple[str, ...]] = {}
    for i, j, k in combinations(range(1, 6), 3):
        vectors[f"v{i}{j}{k}"] = triple_minor5(u, i, j, k)
        vectors[f"w{i}{j}{k}"] = _support_partner(u, (i, j, k))
        blocks[f"B{i}{j}{k}"] = (
            f"e{i}", f"e{j}", f"e{k}", f"v{i}{j}{k}", f"w{i}{j}{k}"
        )
    vectors.update(g_connectors5(u))
    for g in range(1, 5):
        gname = f"g{g}"
        comp = linalg.nullspace([u.conj(), vectors[gname].conj()])
        hs = linalg.gram_schmidt(comp)
        if len(hs) != 3:
            raise DegenerateInputError("connector complement must be 3-dimensional")
        hnames = []
        for t, h in enumerate(hs, start=1):
            hname = f"h{g}_{t}"
            vectors[hname] = _integerized(h)
            hnames.append(hname)
        blocks[f"C{g}"] = ("u", gname, *hnames)

    gadget = GadgetBlocks(dimension=5, center=u, vectors=vectors, blocks=blocks)
    if not gadget.verify_blocks():
        raise AssertionError("constructed blocks failed exact orthogonality")
    return gadget


def _integerized(v: CycloVector) -> CycloVector:
    return canonicalize(v).pretty


# --------------------------------------------------------------------------
# fixed sets: the 24-ray eigensystem and the 18-ray KS configuration
# --------------------------------------------------------------------------


def peres24() -> dict[str, CycloVector]:
    """The 24 rays: computational axes, pair-type and full-support-type rays."""
    out: dict[str, CycloVector] = {}
    for m in range(4):
        out[f"e{m + 1}"] = CycloVector([ONE if t == m else ZERO for t in range(4)])
    for i, j in combinations(range(4), 2):
        for s in (1, -1):
            comps = [ZERO] * 4
            comps[i] = ONE
            comps[j] = CycloNum.from_int(s)
            tag = "p" if s > 0 else "m"
            out[f"d{i + 1}{j + 1}{tag}"] = CycloVector(comps)
    for signs in product((1, -1), repeat=3):
        name = "f" + "".join("p" if s > 0 else "m" for s in signs)
        out[name] = CycloVector([ONE] + [CycloNum.from_int(s) for s in signs])
    return out


def cabello18() -> dict[str, CycloVector]:
    """The 18 printed rays of the 18-9 KS configuration, by their labels."""
    return {name: parse_vector(text) for name, text in CABELLO_VECTORS.items()}


def _named_hypergraph(vectors: Mapping[str, CycloVector], meta_tag: str) -> ContextHypergraph:
    names = sorted(vectors)
    H = enumerate_contexts([vectors[n] for n in names], 4, meta={"set": meta_tag})
    H.meta["names"] = dict(enumerate(names))
    return H


def peres24_hypergraph() -> ContextHypergraph:
    return _named_hypergraph(peres24(), "peres24")


def cabello18_hypergraph() -> ContextHypergraph:
    return _named_hypergraph(cabello18(), "cabello18")


def projective_subset(
    small: Mapping[str, CycloVector], big: Mapping[str, CycloVector]
) -> bool:
    """True iff every ray of ``small`` is collinear with some ray of ``big``."""
    big_keys = {canonicalize(v).canon.key() for v in big.values()}
    return all(canonicalize(v).canon.key() in big_keys for v in small.values())


def ray_union_coverage(
    sets: Sequence[Mapping[str, CycloVector]], universe: Mapping[str, CycloVector]
) -> tuple[list[str], list[str]]:
    """(covered, missing) universe labels under projective union of the sets."""
    seen = set()
    for s in sets:
        seen.update(canonicalize(v).canon.key() for v in s.values())
    covered, missing = [], []
    for name in sorted(universe):
        key = canonicalize(universe[name]).canon.key()
        (covered if key in seen else missing).append(name)
    return covered, missing


# --------------------------------------------------------------------------
# orthocomplement reconstructions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ReconstructionResult:
    triple: tuple[str, ...]
    target: str
    ok: bool
    detail: str


def run_reconstructions(rows=RECONSTRUCTIONS_REPAIRED) -> list[ReconstructionResult]:
    """Check each orthocomplement row: independence, uniqueness, target match."""
    gadget = build_gadget4(parse_vector("(1,1,1,1)"))
    sides = {"c": cabello18(), "g": gadget.vectors}
    results = []
    for side, triple, tside, tlabel, tvec in rows:
        source = sides[side]
        target = parse_vector(tvec)
        try:
            vecs = [source[name] for name in triple]
        except KeyError as missing:
            results.append(
                ReconstructionResult(triple, tlabel, False, f"unknown label {missing}")
            )
            continue
        try:
            comp = complement_ray(vecs)
        except DegenerateInputError as err:
            results.append(ReconstructionResult(triple, tlabel, False, str(err)))
            continue
        if collinear(comp, target):
            results.append(ReconstructionResult(triple, tlabel, True, "unique and matching"))
        else:
            results.append(
                ReconstructionResult(
                    triple, tlabel, False, f"complement {comp!r} is not the stated ray {tvec}"
                )
            )
    return results


def reconstruct_missing(
    source: Mapping[str, CycloVector],
    rows: Sequence[tuple[Sequence[str], CycloVector]],
) -> list[CycloVector]:
    """Complement each triple from ``source`` and confirm the stated target.

    Raises ReconstructionError on dependent triples or target mismatch.
    """
    out = []
    for triple, target in rows:
        vecs = [source[name] for name in triple]
        try:
            comp = complement_ray(vecs)
        except DegenerateInputError as err:
            raise ReconstructionError(
                f"triple {tuple(triple)} is dependent: {err}"
            ) from None
        if not collinear(comp, target):
            raise ReconstructionError(
                f"triple {tuple(triple)} reconstructs {comp!r}, not {target!r}"
            )
        out.append(comp)
    return out
