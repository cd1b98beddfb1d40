"""The Whitten-group action on linking matrices and its stabilizers.

For three components the action factors through a homomorphism f3 onto
(Z2)^3 semidirect S3 acting naturally on integer triples; stabilizers of
matrices are preimages of table stabilizers of canonical-form triples.
For four components a partial theory covers matrices whose only zero
off-diagonal entries are A14 and A23 (the "quad" form).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .whitten import (
    Permutation,
    Subgroup,
    WhittenElement,
    compose,
    conjugate,
    enumerate_gamma,
    identity,
    inverse,
)

__all__ = [
    "LinkingMatrix",
    "Triple",
    "Quad4",
    "ImageElement3",
    "ImageElement4",
    "QuadPatternError",
    "act_matrix",
    "stabilizer_bruteforce",
    "f3",
    "f3_preimage",
    "f3_kernel",
    "classify_triple",
    "stabilizer_structured_3",
    "f4",
    "f4_preimage",
    "f4_kernel",
    "G0_CYCLES",
    "stabilizer_structured_4",
    "mirror_zero_linking_check",
]


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix with zero diagonal, stored as tuple rows."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("matrix is not square")
            if row[i] != 0:
                raise ValueError("diagonal entry is nonzero")
            for j in range(n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("matrix is not symmetric")

    @staticmethod
    def from_rows(rows) -> "LinkingMatrix":
        return LinkingMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def mu(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_json(self):
        return [list(r) for r in self.entries]

    def overall_linking(self) -> int:
        s = sum(sum(r) for r in self.entries)
        assert s % 2 == 0
        return s // 2


@dataclass(frozen=True)
class Triple:
    """(z1, z2, z3) with z_k the linking number of the pair omitting k."""

    z1: int
    z2: int
    z3: int

    @staticmethod
    def from_matrix(a: LinkingMatrix) -> "Triple":
        if a.mu != 3:
            raise ValueError("triples require mu=3")
        return Triple(a[1, 2], a[0, 2], a[0, 1])

    def to_matrix(self) -> LinkingMatrix:
        z1, z2, z3 = self.z1, self.z2, self.z3
        return LinkingMatrix.from_rows([[0, z3, z2], [z3, 0, z1], [z2, z1, 0]])

    def as_tuple(self):
        return (self.z1, self.z2, self.z3)


@dataclass(frozen=True)
class Quad4:
    """(z1,z2,z3,z4) = (A12, A24, A31, A43) for matrices with A14 = A23 = 0."""

    z1: int
    z2: int
    z3: int
    z4: int

    @staticmethod
    def from_matrix(a: LinkingMatrix) -> "Quad4":
        if a.mu != 4:
            raise ValueError("quads require mu=4")
        if a[0, 3] != 0 or a[1, 2] != 0:
            raise QuadPatternError("matrix lacks the A14 = A23 = 0 zero pattern")
        return Quad4(a[0, 1], a[1, 3], a[2, 0], a[3, 2])

    def to_matrix(self) -> LinkingMatrix:
        z1, z2, z3, z4 = self.z1, self.z2, self.z3, self.z4
        return LinkingMatrix.from_rows(
            [[0, z1, z3, 0], [z1, 0, 0, z2], [z3, 0, 0, z4], [0, z2, z4, 0]]
        )

    def as_tuple(self):
        return (self.z1, self.z2, self.z3, self.z4)


class QuadPatternError(ValueError):
    """Raised when a 4x4 matrix is outside the structured theory's scope."""


def act_matrix(g: WhittenElement, a: LinkingMatrix) -> LinkingMatrix:
    """Lk(g(L))_ij = eps0 * eps_i * eps_j * Lk(L)_{p(i)p(j)}."""
    if g.mu != a.mu:
        raise ValueError(f"mu mismatch: {g.mu} != {a.mu}")
    p = g.perm.images
    new = [
        [
            0 if i == j else g.eps0 * g.eps[i] * g.eps[j] * a.entries[p[i]][p[j]]
            for j in range(a.mu)
        ]
        for i in range(a.mu)
    ]
    return LinkingMatrix.from_rows(new)


def stabilizer_bruteforce(a: LinkingMatrix) -> Subgroup:
    if a.mu > 5:
        raise ValueError("brute force limited to mu <= 5")
    elems = [g for g in enumerate_gamma(a.mu) if act_matrix(g, a) == a]
    return Subgroup.from_elements(a.mu, elems)


# -- the mu=3 theory ---------------------------------------------------------


@dataclass(frozen=True)
class ImageElement3:
    """Element (delta_1, delta_2, delta_3, p) of (Z2)^3 semidirect S3."""

    delta: tuple[int, int, int]
    perm: Permutation

    def act(self, z: tuple[int, int, int]) -> tuple[int, int, int]:
        p = self.perm.images
        return tuple(self.delta[i] * z[p[i]] for i in range(3))

    def mul(self, other: "ImageElement3") -> "ImageElement3":
        p = self.perm.images
        delta = tuple(self.delta[i] * other.delta[p[i]] for i in range(3))
        return ImageElement3(delta, other.perm.after(self.perm))


def _im3(d1, d2, d3, cyc) -> ImageElement3:
    return ImageElement3((d1, d2, d3), Permutation.from_cycles(cyc, 3))


def f3(g: WhittenElement) -> ImageElement3:
    """The homomorphism from the 3-component Whitten group onto (Z2)^3 x| S3."""
    if g.mu != 3:
        raise ValueError("f3 requires mu=3")
    e = g.eps0 * g.eps[0] * g.eps[1] * g.eps[2]
    return ImageElement3((g.eps[0] * e, g.eps[1] * e, g.eps[2] * e), g.perm)


def f3_preimage(d: ImageElement3) -> tuple[WhittenElement, WhittenElement]:
    d1, d2, d3 = d.delta
    eps0 = d1 * d2 * d3
    return (
        WhittenElement(eps0, (d1, d2, d3), d.perm),
        WhittenElement(eps0, (-d1, -d2, -d3), d.perm),
    )


def f3_kernel() -> tuple[WhittenElement, WhittenElement]:
    return f3_preimage(ImageElement3((1, 1, 1), Permutation.identity(3)))


# Image-group stabilizers for the ten canonical triple forms.
_STAB3 = {
    "(0,0,0)": [
        _im3(d1, d2, d3, c)
        for d1 in (1, -1) for d2 in (1, -1) for d3 in (1, -1)
        for c in ("e", "(12)", "(13)", "(23)", "(123)", "(132)")
    ],
    "(a,0,0)": [
        _im3(1, d2, d3, c) for d2 in (1, -1) for d3 in (1, -1) for c in ("e", "(23)")
    ],
    "(a,-a,0)": [
        _im3(1, 1, 1, "e"), _im3(1, 1, -1, "e"),
        _im3(-1, -1, 1, "(12)"), _im3(-1, -1, -1, "(12)"),
    ],
    "(a,a,0)": [
        _im3(1, 1, d3, c) for d3 in (1, -1) for c in ("e", "(12)")
    ],
    "(a,b,0)": [_im3(1, 1, 1, "e"), _im3(1, 1, -1, "e")],
    "(a,a,-a)": [
        _im3(1, 1, 1, "e"), _im3(1, 1, 1, "(12)"), _im3(1, -1, -1, "(23)"),
        _im3(-1, 1, -1, "(13)"), _im3(1, -1, -1, "(123)"), _im3(-1, 1, -1, "(132)"),
    ],
    "(a,a,a)": [
        _im3(1, 1, 1, c) for c in ("e", "(12)", "(13)", "(23)", "(123)", "(132)")
    ],
    "(a,b,-b)": [_im3(1, 1, 1, "e"), _im3(1, -1, -1, "(23)")],
    "(a,b,b)": [_im3(1, 1, 1, "e"), _im3(1, 1, 1, "(23)")],
    "(a,b,c)": [_im3(1, 1, 1, "e")],
}

TRIPLE_STAB_ORDER = {form: 2 * len(stab) for form, stab in _STAB3.items()}


def classify_triple(z: Triple) -> tuple[str, WhittenElement]:
    """Orbit type of a triple plus a pure permutation carrying it to that form.

    The returned element g satisfies: acting with g on z's matrix yields a
    matrix whose triple literally matches the named pattern.
    """
    vals = z.as_tuple()
    absvals = tuple(abs(v) for v in vals)
    nonzero = [v for v in vals if v]

    def arrangement_matches(arr, form):
        a, b, c = arr
        if form == "(0,0,0)":
            return arr == (0, 0, 0)
        if form == "(a,0,0)":
            return a != 0 and b == 0 and c == 0
        if form == "(a,-a,0)":
            return a != 0 and b == -a and c == 0
        if form == "(a,a,0)":
            return a != 0 and b == a and c == 0
        if form == "(a,b,0)":
            return a != 0 and b != 0 and abs(a) != abs(b) and c == 0 and abs(a) > abs(b)
        if form == "(a,a,-a)":
            return a != 0 and b == a and c == -a
        if form == "(a,a,a)":
            return a != 0 and b == a and c == a
        if form == "(a,b,-b)":
            return a and b and abs(a) != abs(b) and c == -b and b > 0
        if form == "(a,b,b)":
            return a and b and abs(a) != abs(b) and c == b
        if form == "(a,b,c)":
            return (a and b and c and len({abs(a), abs(b), abs(c)}) == 3
                    and abs(a) > abs(b) > abs(c))
        return False

    if len(nonzero) == 0:
        form = "(0,0,0)"
    elif len(nonzero) == 1:
        form = "(a,0,0)"
    elif len(nonzero) == 2:
        x, y = nonzero
        if abs(x) != abs(y):
            form = "(a,b,0)"
        else:
            form = "(a,a,0)" if x == y else "(a,-a,0)"
    elif len(set(absvals)) == 1:
        form = "(a,a,a)" if len(set(nonzero)) == 1 else "(a,a,-a)"
    elif len(set(absvals)) == 3:
        form = "(a,b,c)"
    else:
        pair = [v for v in nonzero if absvals.count(abs(v)) == 2]
        form = "(a,b,b)" if pair[0] == pair[1] else "(a,b,-b)"

    # Find a permutation q with (z_{q(1)}, z_{q(2)}, z_{q(3)}) in canonical shape.
    for q in itertools.permutations(range(3)):
        arr = tuple(vals[q[i]] for i in range(3))
        if arrangement_matches(arr, form):
            g = WhittenElement(1, (1, 1, 1), Permutation(q))
            return form, g
    raise AssertionError(f"no canonical arrangement found for {vals}")


def stabilizer_structured_3(a: LinkingMatrix) -> Subgroup:
    """Stabilizer of a 3x3 linking matrix built from the orbit-type table."""
    z = Triple.from_matrix(a)
    form, g = classify_triple(z)
    ginv = inverse(g)
    elems = []
    for im in _STAB3[form]:
        for w in f3_preimage(im):
            elems.append(compose(ginv, compose(w, g)))
    return Subgroup.from_elements(3, elems)


def mirror_zero_linking_check(a: LinkingMatrix) -> bool:
    """Whether the stabilizer admits a mirror element; forces a zero entry."""
    if a.mu != 3:
        raise ValueError("mu=3 only")
    stab = stabilizer_structured_3(a)
    has_mirror = any(g.eps0 == -1 for g in stab.elements)
    if has_mirror:
        assert any(
            a[i, j] == 0 for i in range(3) for j in range(i + 1, 3)
        ), "mirror symmetry without a zero linking number"
    return has_mirror


# -- the mu=4 theory ---------------------------------------------------------

G0_CYCLES = ("e", "(14)", "(23)", "(14)(23)", "(12)(34)", "(13)(24)", "(1243)", "(1342)")

_F0_MAP = {
    "e": "e",
    "(14)": "(12)(34)",
    "(23)": "(13)(24)",
    "(13)(24)": "(14)",
    "(12)(34)": "(23)",
    "(1243)": "(1243)",
    "(14)(23)": "(14)(23)",
    "(1342)": "(1342)",
}

_G0 = {c: Permutation.from_cycles(c, 4) for c in G0_CYCLES}
_F0 = {_G0[c]: _G0[t] for c, t in _F0_MAP.items()}
_F0_INV = {v: k for k, v in _F0.items()}


@dataclass(frozen=True)
class ImageElement4:
    """Element (delta_1..delta_4, r) of the image of f4 in (Z2)^4 x| S4."""

    delta: tuple[int, int, int, int]
    perm: Permutation

    def __post_init__(self):
        d1, d2, d3, d4 = self.delta
        if d4 != d1 * d2 * d3:
            raise ValueError("image constraint delta4 = delta1*delta2*delta3 violated")

    def act(self, z: tuple[int, int, int, int]) -> tuple[int, ...]:
        p = self.perm.images
        return tuple(self.delta[i] * z[p[i]] for i in range(4))

    def mul(self, other: "ImageElement4") -> "ImageElement4":
        p = self.perm.images
        delta = tuple(self.delta[i] * other.delta[p[i]] for i in range(4))
        return ImageElement4(delta, other.perm.after(self.perm))


def f4(g: WhittenElement) -> ImageElement4:
    """The homomorphism on the subgroup of the 4-component group over G0."""
    if g.mu != 4:
        raise ValueError("f4 requires mu=4")
    if g.perm not in _F0:
        raise ValueError(f"permutation {g.perm.cycle_string()} outside G0")
    e0, (e1, e2, e3, e4) = g.eps0, g.eps
    return ImageElement4(
        (e0 * e1 * e2, e0 * e2 * e4, e0 * e1 * e3, e0 * e3 * e4), _F0[g.perm]
    )


def f4_preimage(d: ImageElement4) -> tuple[WhittenElement, ...]:
    if d.perm not in _F0_INV:
        raise ValueError(f"permutation {d.perm.cycle_string()} outside f0(G0)")
    p = _F0_INV[d.perm]
    d1, d2, d3, _ = d.delta
    out = []
    for e1 in (1, -1):
        for e2 in (1, -1):
            out.append(
                WhittenElement(e1 * e2 * d1, (e1, e2, e2 * d1 * d3, e1 * d1 * d2), p)
            )
    return tuple(out)


def f4_kernel() -> tuple[WhittenElement, ...]:
    return f4_preimage(ImageElement4((1, 1, 1, 1), Permutation.identity(4)))


def _im4(d1, d2, d3, d4, cyc) -> ImageElement4:
    return ImageElement4((d1, d2, d3, d4), Permutation.from_cycles(cyc, 4))


# Table of image stabilizers for the three supported quad patterns.
_STAB4 = {
    "(a,a,a,a)": [_im4(1, 1, 1, 1, c) for c in G0_CYCLES],
    "(a,a,-a,a)": [
        _im4(1, 1, 1, 1, "e"), _im4(1, 1, -1, -1, "(12)(34)"), _im4(1, 1, -1, -1, "(1243)"),
        _im4(1, 1, 1, 1, "(14)"), _im4(-1, 1, -1, 1, "(13)(24)"), _im4(-1, 1, -1, 1, "(1342)"),
        _im4(1, -1, -1, 1, "(23)"), _im4(1, -1, -1, 1, "(14)(23)"),
    ],
    "(a,-a,-a,a)": [
        _im4(1, 1, 1, 1, "e"), _im4(-1, -1, -1, -1, "(12)(34)"), _im4(-1, -1, -1, -1, "(1243)"),
        _im4(1, 1, 1, 1, "(14)"), _im4(-1, -1, -1, -1, "(13)(24)"), _im4(-1, -1, -1, -1, "(1342)"),
        _im4(1, 1, 1, 1, "(23)"), _im4(1, 1, 1, 1, "(14)(23)"),
    ],
}


def quad_pattern(z: Quad4) -> str:
    z1, z2, z3, z4 = z.as_tuple()
    if z1 == 0:
        raise QuadPatternError(f"unsupported quad pattern {z.as_tuple()}")
    if (z2, z3, z4) == (z1, z1, z1):
        return "(a,a,a,a)"
    if (z2, z3, z4) == (z1, -z1, z1):
        return "(a,a,-a,a)"
    if (z2, z3, z4) == (-z1, -z1, z1):
        return "(a,-a,-a,a)"
    raise QuadPatternError(f"unsupported quad pattern {z.as_tuple()}")


def stabilizer_structured_4(a: LinkingMatrix) -> Subgroup:
    """Stabilizer in the 4-component group for the three handled quad types."""
    z = Quad4.from_matrix(a)
    form = quad_pattern(z)
    elems = []
    for im in _STAB4[form]:
        elems.extend(f4_preimage(im))
    return Subgroup.from_elements(4, elems)
