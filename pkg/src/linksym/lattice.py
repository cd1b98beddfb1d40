"""Subgroup lattice enumeration and conjugacy classes of the Whitten groups.

Bottom-up cyclic extension over the canonical element enumeration; subgroup
sets are bitmasks handled by the kernel (compiled or pure).  The mu=5 job
(270131 subgroups) runs only behind allow_long and checkpoints its counts.
"""

from __future__ import annotations

import json
import os

import numpy as np

from . import kernel
from .whitten import (
    Subgroup,
    WhittenElement,
    compose,
    enumerate_gamma,
    gamma_order,
    identity,
    inverse,
)

__all__ = [
    "GammaTables",
    "all_subgroups",
    "conjugacy_classes_of_subgroups",
    "subgroup_counts",
    "ResourceBudgetError",
]

_TABLES: dict[int, "GammaTables"] = {}


class ResourceBudgetError(RuntimeError):
    pass


class GammaTables:
    """Multiplication/inverse/conjugation tables over the canonical order."""

    def __init__(self, mu: int):
        self.mu = mu
        self.elements = enumerate_gamma(mu)
        self.index = {e: i for i, e in enumerate(self.elements)}
        assert self.elements[0] == identity(mu)
        n = len(self.elements)
        dtype = np.uint16 if n < 65536 else np.uint32
        self.mult = np.zeros((n, n), dtype=dtype)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                self.mult[i, j] = self.index[compose(a, b)]
        self.inv = np.zeros(n, dtype=dtype)
        for i, a in enumerate(self.elements):
            self.inv[i] = self.index[inverse(a)]

    def conj_table(self, g: WhittenElement) -> np.ndarray:
        gi = self.index[g]
        n = len(self.elements)
        gin = int(self.inv[gi])
        return self.mult[self.mult[np.full(n, gi), np.arange(n)], np.full(n, gin)]

    def group_generators(self) -> list[WhittenElement]:
        """A small generating set of the whole group."""
        from .whitten import Permutation, pure_exchange

        mu = self.mu
        gens = [
            WhittenElement(-1, (1,) * mu, Permutation.identity(mu)),
            WhittenElement(1, (-1,) + (1,) * (mu - 1), Permutation.identity(mu)),
        ]
        if mu >= 2:
            gens.append(pure_exchange(mu, 1, 2))
        if mu >= 3:
            cyc = "(" + "".join(str(i) for i in range(1, mu + 1)) + ")"
            gens.append(WhittenElement(1, (1,) * mu, Permutation.from_cycles(cyc, mu)))
        return gens

    def subgroup_from_mask(self, mask: int, gens=()) -> Subgroup:
        elems = [self.elements[i] for i in kernel.indices_from_mask(mask)]
        return Subgroup.from_elements(self.mu, elems, generators=tuple(gens))

    def mask_from_subgroup(self, h: Subgroup) -> int:
        return kernel.mask_from_indices(self.index[e] for e in h.elements)


def tables(mu: int) -> GammaTables:
    if mu not in _TABLES:
        _TABLES[mu] = GammaTables(mu)
    return _TABLES[mu]


def _lattice_masks(mu: int, allow_long: bool, checkpoint: str | None):
    if mu > 5 or mu < 1:
        raise ValueError("mu must be 1..5")
    if mu == 5 and not allow_long:
        raise ResourceBudgetError(
            "the mu=5 lattice (270131 subgroups) is an hours-scale job; "
            "pass allow_long=True (CLI: --allow-long) to run it"
        )
    t = tables(mu)
    masks = kernel.all_subgroups_masks(t.mult, t.inv)
    if mu == 5:
        masks = _extend_with_perfect(t, masks)
    if checkpoint:
        with open(checkpoint, "w") as fh:
            json.dump({"mu": mu, "subgroups": len(masks)}, fh)
    return t, masks


def _extend_with_perfect(t: GammaTables, masks):
    """Add subgroups above perfect subgroups (alternating-group content).

    Cyclic extension only reaches solvable subgroups; for mu=5 the group
    contains copies of the alternating group on five symbols.  Every missing
    subgroup contains a perfect subgroup; we find the perfect ones by lifting
    generator pairs over the sign-module and re-run cyclic extension seeded
    with them.
    """
    n = len(t.elements)
    mu = t.mu
    # elements of the kernel of the projection to S_mu (signs only)
    module = [i for i, e in enumerate(t.elements) if e.perm.images == tuple(range(mu))]
    module_mask = kernel.mask_from_indices(module)
    from .whitten import Permutation

    a5_gens = (
        Permutation.from_cycles("(12345)", 5),
        Permutation.from_cycles("(345)", 5),
    )
    lifts0 = [i for i, e in enumerate(t.elements) if e.perm == a5_gens[0]]
    lifts1 = [i for i, e in enumerate(t.elements) if e.perm == a5_gens[1]]
    perfect_masks = set()
    for x in lifts0:
        for y in lifts1:
            m = kernel.closure_mask([x, y], t.mult)
            # perfect iff equal to its derived subgroup
            if _derived_mask(t, m) == m:
                perfect_masks.add(m)
    found = set(masks)
    queue = [m for m in perfect_masks if m not in found]
    found.update(perfect_masks)
    # grow upward by cyclic extension from each perfect seed
    while queue:
        mask = queue.pop()
        idxs = kernel.indices_from_mask(mask)
        hbool = np.zeros(n, dtype=bool)
        hbool[idxs] = True
        harr = np.array(idxs)
        for x in range(1, n):
            if hbool[x]:
                continue
            # x must normalize: test via a handful of generators
            y = int(x)
            k = 1
            ok = True
            while not hbool[y]:
                y = int(t.mult[y][x])
                k += 1
                if k > 13:
                    ok = False
                    break
            if not ok or k not in (2, 3, 5, 7, 11, 13):
                continue
            conj = t.mult[t.mult[np.full(len(harr), x), harr], np.full(len(harr), int(t.inv[x]))]
            if not hbool[conj].all():
                continue
            newmask = mask
            power = x
            for _ in range(k - 1):
                for e in t.mult[harr, power]:
                    newmask |= 1 << int(e)
                power = int(t.mult[power][x])
            if newmask not in found:
                found.add(newmask)
                queue.append(newmask)
    return sorted(found, key=lambda m: (bin(m).count("1"), m))


def _derived_mask(t: GammaTables, mask: int) -> int:
    idxs = kernel.indices_from_mask(mask)
    gens = set()
    for a in idxs:
        for b in idxs:
            c = int(t.mult[int(t.mult[a][b])][int(t.mult[int(t.inv[a])][int(t.inv[b])])])
            gens.add(c)
    return kernel.closure_mask(sorted(gens), t.mult)


def all_subgroups(mu: int, allow_long: bool = False, checkpoint: str | None = None) -> list[Subgroup]:
    """Every subgroup of the Whitten group, canonically ordered."""
    t, masks = _lattice_masks(mu, allow_long, checkpoint)
    return [t.subgroup_from_mask(m) for m in masks]


def subgroup_counts(mu: int, allow_long: bool = False) -> tuple[int, int]:
    """(number of subgroups, number of conjugacy classes)."""
    t, masks = _lattice_masks(mu, allow_long, None)
    conj_tabs = [t.conj_table(g) for g in t.group_generators()]
    classes = kernel.conjugacy_classes_masks(masks, conj_tabs)
    return len(masks), len(classes)


def conjugacy_classes_of_subgroups(mu: int, allow_long: bool = False) -> list[Subgroup]:
    """One representative per conjugacy class (the minimal mask)."""
    t, masks = _lattice_masks(mu, allow_long, None)
    conj_tabs = [t.conj_table(g) for g in t.group_generators()]
    classes = kernel.conjugacy_classes_masks(masks, conj_tabs)
    return [t.subgroup_from_mask(cls[0]) for cls in classes]
