"""Pure-Python/numpy implementations of the lattice hot kernels.

The compiled extension (_kernel_c) provides the same functions; linksym.kernel
picks whichever is importable.  Subgroups are bitmasks (Python ints) over the
canonical element enumeration.
"""

from __future__ import annotations

import numpy as np

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def mask_from_indices(idxs) -> int:
    m = 0
    for i in idxs:
        m |= 1 << int(i)
    return m


def indices_from_mask(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def closure_mask(gen_idxs, mult) -> int:
    """Subgroup generated by the given element indices (index 0 = identity)."""
    mask = 1
    frontier = [0]
    gen_idxs = list(gen_idxs)
    while frontier:
        nxt = []
        for x in frontier:
            row = mult[x]
            for g in gen_idxs:
                for y in (int(row[g]), int(mult[g][x])):
                    if not (mask >> y) & 1:
                        mask |= 1 << y
                        nxt.append(y)
        frontier = nxt
    return mask


def all_subgroups_masks(mult: np.ndarray, inv: np.ndarray, progress=None) -> list[int]:
    """Complete subgroup list of a solvable group by cyclic extension.

    Returns bitmasks sorted by (popcount, mask).  mult/inv index the
    canonical element order with identity at index 0.
    """
    n = mult.shape[0]
    order = np.ones(n, dtype=np.int64)
    for i in range(n):
        k, x = 1, i
        while x != 0:
            x = int(mult[x][i])
            k += 1
        order[i] = k

    # generators stored per subgroup for cheap normalizer checks
    found: dict[int, tuple[int, ...]] = {1: ()}
    queue: list[int] = []
    for i in range(1, n):
        if int(order[i]) in _SMALL_PRIMES:
            m = closure_mask([i], mult)
            if m not in found:
                found[m] = (i,)
                queue.append(m)

    all_idx = np.arange(n)
    while queue:
        mask = queue.pop()
        gens = found[mask]
        helems = indices_from_mask(mask)
        hsize = len(helems)
        if hsize == n:
            continue
        hbool = np.zeros(n, dtype=bool)
        hbool[helems] = True
        # normalizer: g with g gen g^-1 in H for every generator
        norm = np.ones(n, dtype=bool)
        for g in gens:
            conj = mult[mult[all_idx, g], inv[all_idx]]
            norm &= hbool[conj]
        cand = np.nonzero(norm & ~hbool)[0]
        seen_cosets = 0
        used = np.zeros(n, dtype=bool)
        harr = np.array(helems)
        for x in cand:
            x = int(x)
            if used[x]:
                continue
            coset = mult[harr, x]
            used[coset] = True
            # order of the coset xH in N(H)/H
            k, y = 1, x
            while not hbool[y]:
                y = int(mult[y][x])
                k += 1
            if k not in _SMALL_PRIMES:
                continue
            newmask = mask
            power = x
            for _ in range(k - 1):
                cos = mult[harr, power]
                for e in cos:
                    newmask |= 1 << int(e)
                power = int(mult[power][x])
            if newmask not in found:
                found[newmask] = gens + (x,)
                queue.append(newmask)
            seen_cosets += 1
    return sorted(found, key=lambda m: (bin(m).count("1"), m))


def conjugacy_classes_masks(masks, conj_tables) -> list[list[int]]:
    """Partition subgroup masks into conjugation orbits.

    conj_tables: element-index permutation arrays for a generating set.
    """
    mask_set = set(masks)
    unseen = set(masks)
    classes = []
    for m in sorted(masks):
        if m not in unseen:
            continue
        orbit = {m}
        frontier = [m]
        while frontier:
            cur = frontier.pop()
            idxs = indices_from_mask(cur)
            for tab in conj_tables:
                img = 0
                for i in idxs:
                    img |= 1 << int(tab[i])
                if img not in orbit:
                    assert img in mask_set, "conjugate of a subgroup missing from the list"
                    orbit.add(img)
                    frontier.append(img)
        unseen -= orbit
        classes.append(sorted(orbit))
    return classes
