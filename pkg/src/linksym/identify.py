"""Abstract isomorphism labels and the named two-component subgroup catalog.

Labels are decided by invariant fingerprints (order multiset, center,
derived subgroup, conjugacy class sizes) matched against reference models
built from the explicitly known groups; the fingerprint set is validated as
discriminating by exhaustive tests over the whole lattice.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .whitten import (
    Permutation,
    Subgroup,
    WhittenElement,
    compose,
    conjugate,
    conjugate_subgroup,
    element_order,
    enumerate_gamma,
    gamma_order,
    generate,
    identity,
    inverse,
)

__all__ = ["identify_group", "fingerprint", "named_subgroups_2", "match_named_subgroup_2", "GroupIdLabel"]


@dataclass(frozen=True)
class GroupIdLabel:
    name: str
    order: int

    def __str__(self):
        return self.name if self.name != "other" else f"other({self.order})"


def fingerprint(h: Subgroup):
    elems = list(h.elements)
    eset = h.element_set()
    orders = Counter(element_order(x) for x in elems)
    center = [x for x in elems if all(compose(x, y) == compose(y, x) for y in elems)]
    comms = {
        compose(compose(x, y), inverse(compose(y, x)))
        for x in elems
        for y in elems
    }
    derived = generate(h.mu, [c for c in comms if c != identity(h.mu)])
    # conjugacy class size multiset inside h
    left = set(elems)
    class_sizes = []
    while left:
        x = next(iter(left))
        orbit = {conjugate(g, x) for g in elems}
        assert orbit <= eset
        class_sizes.append(len(orbit))
        left -= orbit
    return (
        h.order,
        tuple(sorted(orders.items())),
        len(center),
        derived.order,
        tuple(sorted(class_sizes)),
    )


def _quad_stabilizer_model() -> Subgroup:
    from .linkmatrix import Quad4, stabilizer_structured_4

    return stabilizer_structured_4(Quad4(1, 1, 1, 1).to_matrix())


def _reference_models():
    e2 = WhittenElement.parse
    g2 = enumerate_gamma(2)
    refs = {
        "trivial": Subgroup.from_elements(1, [identity(1)]),
        "Z2": generate(1, [e2("(1,-1,e)")]),
        "D2": Subgroup.from_elements(2, [g for g in g2 if g.eps0 == 1 and g.perm.images == (0, 1)]),
        "D4": Subgroup.from_elements(2, [g for g in g2 if g.eps0 == 1]),
        "Z2xZ2xZ2": Subgroup.from_elements(2, [g for g in g2 if g.perm.images == (0, 1)]),
        "Z2xD4": Subgroup.from_elements(2, g2),
        "D6": generate(3, [e2("(1,1,1,1,(12))"), e2("(1,-1,1,1,(123))")]),
        "D8": generate(4, [e2("(1,1,1,1,1,(13)(24))"), e2("(1,1,1,-1,1,(1243))")]),
        "Z2xZ2xD4": _quad_stabilizer_model(),
        "Z2xS3wr": generate(3, [e2("(-1,1,1,1,e)"), e2("(1,1,1,1,(123))"), e2("(1,-1,1,1,(12))")]),
    }
    return refs


_REF_FP = None


def _ref_fingerprints():
    global _REF_FP
    if _REF_FP is None:
        _REF_FP = {}
        for name, H in _reference_models().items():
            fp = fingerprint(H)
            assert fp not in _REF_FP.values(), f"fingerprint collision for {name}"
            _REF_FP[name] = fp
    return _REF_FP


def identify_group(h: Subgroup) -> GroupIdLabel:
    """Catalog label of the subgroup's abstract isomorphism type."""
    if h.mu >= 3 and h.order == gamma_order(h.mu):
        return GroupIdLabel("full", h.order)
    if h.order > 48:
        return GroupIdLabel("other", h.order)
    fp = fingerprint(h)
    for name, ref in _ref_fingerprints().items():
        if fp == ref:
            return GroupIdLabel(name, h.order)
    return GroupIdLabel("other", h.order)


def named_subgroups_2() -> dict[str, Subgroup]:
    """The catalog of named subgroups of the two-component Whitten group."""
    g2 = enumerate_gamma(2)
    e = WhittenElement.parse

    def sel(pred):
        return Subgroup.from_elements(2, [g for g in g2 if pred(g)])

    ident = Permutation.identity(2).images
    return {
        "trivial": Subgroup.from_elements(2, [identity(2)]),
        "S2,1": generate(2, [e("(1,-1,-1,e)")]),
        "S4,1": generate(2, [e("(1,-1,-1,e)"), e("(1,1,1,(12))")]),
        "S4,2": sel(lambda g: g.eps0 == 1 and g.perm.images == ident),
        "S4,3": sel(lambda g: g.perm.images == ident and g.eps0 * g.eps[0] * g.eps[1] == 1),
        "S8,1": sel(lambda g: g.eps0 == 1),
        "S8,2": sel(lambda g: g.eps0 * g.eps[0] * g.eps[1] == 1),
        "S8,3": sel(lambda g: g.perm.images == ident),
        "G2": Subgroup.from_elements(2, g2),
    }


def match_named_subgroup_2(h: Subgroup) -> tuple[str, bool]:
    """(catalog name, exact) for a two-component subgroup.

    Exact element-set matches are preferred; otherwise a conjugate match is
    reported with exact=False.  Unmatched subgroups return ("other", False).
    """
    if h.mu != 2:
        raise ValueError("catalog is for two-component subgroups")
    catalog = named_subgroups_2()
    eset = h.element_set()
    for name, H in catalog.items():
        if eset == H.element_set():
            return name, True
    for g in enumerate_gamma(2):
        conj = conjugate_subgroup(h, g).element_set()
        for name, H in catalog.items():
            if conj == H.element_set():
                return name, False
    return "other", False
