"""Oriented, component-labeled link diagrams in PD form.

A crossing is four arc labels in counterclockwise order starting from the
incoming under-strand.  Orientation is solved from that convention (the
incoming-over position of each crossing is derived, not stored in the text
format unless ambiguous).  Crossingless unknot components are carried
separately since PD codes cannot express them.
"""

from __future__ import annotations

import re
from collections import defaultdict

from .linkmatrix import LinkingMatrix
from .whitten import WhittenElement

__all__ = ["LinkDiagram", "PDError", "parse_pd", "serialize_pd", "apply_whitten", "sublink", "simplify"]


class PDError(ValueError):
    """Malformed or inconsistent PD data; message names the offender."""


class LinkDiagram:
    """Immutable oriented labeled diagram.

    crossings: tuple of (a, b, c, d) arc 4-tuples, CCW from incoming under.
    comp_of:   arc -> component label in 1..mu.
    free_loops: labels whose components are crossingless circles.
    over_in:   per crossing, 1 or 3 -- the position of the incoming over arc.
    """

    __slots__ = ("crossings", "comp_of", "free_loops", "over_in", "mu", "_succ", "_components")

    def __init__(self, crossings, comp_of=None, free_loops=(), over_in=None):
        self.crossings = tuple(tuple(c) for c in crossings)
        for c in self.crossings:
            if len(c) != 4:
                raise PDError(f"crossing {c} does not have 4 arcs")
        occ = defaultdict(list)
        for ci, c in enumerate(self.crossings):
            for k, a in enumerate(c):
                occ[a].append((ci, k))
        for a, places in occ.items():
            if len(places) != 2:
                raise PDError(f"arc {a} appears {len(places)} times (expected 2)")
        self.over_in = tuple(over_in) if over_in is not None else self._solve_orientation(occ)
        for ci, o in enumerate(self.over_in):
            if o not in (1, 3):
                raise PDError(f"crossing {ci}: over_in must be 1 or 3")
        self._succ = self._successors(occ)
        self._components = self._trace_components()
        if comp_of is None:
            # default labeling: arc components by smallest arc, then loops;
            # free_loops may be a count in this case
            comp_of = {}
            k = 0
            for k, cyc in enumerate(sorted(self._components, key=min), start=1):
                for a in cyc:
                    comp_of[a] = k
            nloops = free_loops if isinstance(free_loops, int) else len(tuple(free_loops))
            free_loops = tuple(range(k + 1, k + 1 + nloops))
        elif isinstance(free_loops, int):
            raise PDError("free loop labels required when comp_of is given")
        self.free_loops = tuple(free_loops)
        self.comp_of = dict(comp_of)
        labels = set(self.comp_of.values()) | set(self.free_loops)
        self.mu = len(self._components) + len(self.free_loops)
        if labels != set(range(1, self.mu + 1)) or len(self.free_loops) != len(set(self.free_loops)):
            raise PDError(f"component labels {sorted(labels)} are not 1..{self.mu}")
        for cyc in self._components:
            cyclabels = {self.comp_of.get(a) for a in cyc}
            if len(cyclabels) != 1 or None in cyclabels:
                raise PDError(f"component through arc {min(cyc)} has labels {cyclabels}")
        if len({self.comp_of[min(c)] for c in self._components}) != len(self._components):
            raise PDError("two components share a label")

    # -- construction helpers ------------------------------------------------

    def _solve_orientation(self, occ) -> tuple[int, ...]:
        """Infer each crossing's incoming-over position from global consistency.

        Every arc must be incoming at exactly one endpoint.  Under-strand
        positions are fixed by convention; over choices propagate.  A
        component that never passes under has no witness; that ambiguity is
        rejected (the census never needs it).
        """
        n = len(self.crossings)
        # incoming[ci][k]: True if the arc at that position enters the crossing
        incoming = [[None] * 4 for _ in range(n)]
        for ci in range(n):
            incoming[ci][0] = True
            incoming[ci][2] = False
        changed = True
        while changed:
            changed = False
            for arc, places in occ.items():
                (c1, k1), (c2, k2) = places
                v1, v2 = incoming[c1][k1], incoming[c2][k2]
                if v1 is None and v2 is not None:
                    incoming[c1][k1] = not v2
                    changed = True
                elif v2 is None and v1 is not None:
                    incoming[c2][k2] = not v1
                    changed = True
                elif v1 is not None and v1 == v2:
                    raise PDError(f"inconsistent orientation at arc {arc}")
            for ci in range(n):
                b, d = incoming[ci][1], incoming[ci][3]
                if b is None and d is not None:
                    incoming[ci][1] = not d
                    changed = True
                elif d is None and b is not None:
                    incoming[ci][3] = not b
                    changed = True
                elif b is not None and b == d:
                    raise PDError(f"crossing {ci}: both over arcs {self.crossings[ci][1]},"
                                  f" {self.crossings[ci][3]} flow the same way")
        out = []
        for ci in range(n):
            b, d = incoming[ci][1], incoming[ci][3]
            if b is None:
                raise PDError(
                    f"orientation of the over strand at crossing {ci} is ambiguous "
                    "(a component never passes under); pass over_in explicitly"
                )
            out.append(1 if b else 3)
        return tuple(out)

    def _successors(self, occ) -> dict[int, int]:
        succ = {}
        for ci, c in enumerate(self.crossings):
            o = self.over_in[ci]
            succ[c[0]] = c[2]
            succ[c[o]] = c[4 - o]
        # sanity: succ must be a permutation of arcs
        if len(set(succ.values())) != len(succ):
            raise PDError("inconsistent orientation: successor relation is not a bijection")
        return succ

    def _trace_components(self):
        comps = []
        seen = set()
        for start in sorted(self._succ):
            if start in seen:
                continue
            cyc = []
            a = start
            while a not in seen:
                seen.add(a)
                cyc.append(a)
                a = self._succ[a]
            comps.append(tuple(cyc))
        return comps

    # -- basic queries --------------------------------------------------------

    @property
    def arcs(self):
        return sorted(self._succ)

    def successor(self, arc: int) -> int:
        return self._succ[arc]

    def component_cycles(self) -> dict[int, tuple[int, ...]]:
        """label -> arcs of that component in traversal order."""
        return {self.comp_of[cyc[0]]: cyc for cyc in self._components}

    def arcs_of(self, label: int) -> tuple[int, ...]:
        return self.component_cycles().get(label, ())

    def crossing_sign(self, ci: int) -> int:
        """+1 when the incoming over arc sits at position 3 (right-hand rule)."""
        return 1 if self.over_in[ci] == 3 else -1

    def crossing_comps(self, ci: int) -> tuple[int, int]:
        """(under component, over component) labels."""
        c = self.crossings[ci]
        return self.comp_of[c[0]], self.comp_of[c[self.over_in[ci]]]

    def writhe(self) -> int:
        return sum(self.crossing_sign(ci) for ci in range(len(self.crossings)))

    def self_writhe(self) -> int:
        return sum(
            self.crossing_sign(ci)
            for ci in range(len(self.crossings))
            if len(set(self.crossing_comps(ci))) == 1
        )

    def linking_matrix(self) -> LinkingMatrix:
        half = [[0] * self.mu for _ in range(self.mu)]
        for ci in range(len(self.crossings)):
            i, j = self.crossing_comps(ci)
            if i != j:
                s = self.crossing_sign(ci)
                half[i - 1][j - 1] += s
                half[j - 1][i - 1] += s
        for i in range(self.mu):
            for j in range(self.mu):
                if half[i][j] % 2:
                    raise PDError("odd signed crossing count between two components")
                half[i][j] //= 2
        return LinkingMatrix.from_rows(half)

    def overall_linking_number(self) -> int:
        return self.linking_matrix().overall_linking()

    def equals(self, other: "LinkDiagram") -> bool:
        return (
            self.crossings == other.crossings
            and self.comp_of == other.comp_of
            and self.free_loops == other.free_loops
            and self.over_in == other.over_in
        )

    def key(self):
        return (self.crossings, tuple(sorted(self.comp_of.items())), tuple(sorted(self.free_loops)), self.over_in)

    def renumbered(self) -> "LinkDiagram":
        """Relabel arcs 1..2n following component traversal order."""
        mapping = {}
        nxt = 1
        for label in sorted(self.component_cycles()):
            for a in self.component_cycles()[label]:
                mapping[a] = nxt
                nxt += 1
        crossings = [tuple(mapping[a] for a in c) for c in self.crossings]
        comp_of = {mapping[a]: l for a, l in self.comp_of.items()}
        return LinkDiagram(crossings, comp_of, self.free_loops, self.over_in)

    def __repr__(self):
        return f"LinkDiagram({len(self.crossings)} crossings, mu={self.mu})"


# -- text format --------------------------------------------------------------

_X_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse 'PD[X[1,3,2,4], X[2,3,1,4]]; comps=[1,O]; overin=[3,3]' text.

    comps lists, per component label, one arc on that component or the
    letter O for a crossingless unknot component.  Both annotations are
    optional; labels default to smallest-arc order.
    """
    text = text.strip()
    m = re.match(r"^PD\[(.*?)\]\s*(?:;(.*))?$", text, re.S)
    if not m:
        raise PDError(f"not a PD expression: {text[:40]!r}")
    body, rest = m.group(1), m.group(2) or ""
    crossings = []
    pos = 0
    body = body.strip()
    while pos < len(body):
        xm = _X_RE.match(body, pos)
        if not xm:
            raise PDError(f"malformed crossing token at: {body[pos:pos+24]!r}")
        crossings.append(tuple(int(g) for g in xm.groups()))
        pos = xm.end()
        while pos < len(body) and body[pos] in ", \t\n":
            pos += 1
    comps_spec = None
    over_in = None
    for part in filter(None, (p.strip() for p in rest.split(";"))):
        am = re.match(r"^(comps|overin)=\[([^\]]*)\]$", part)
        if not am:
            raise PDError(f"bad annotation: {part!r}")
        items = [s.strip() for s in am.group(2).split(",") if s.strip()]
        if am.group(1) == "comps":
            comps_spec = items
        else:
            over_in = [int(s) for s in items]
            if len(over_in) != len(crossings):
                raise PDError("overin annotation length differs from crossing count")
    comp_of = None
    free_loops = ()
    if comps_spec is not None:
        arc_positions = {a for c in crossings for a in c}
        comp_of = {}
        loops = []
        rep_arcs = {}
        for label, tok in enumerate(comps_spec, start=1):
            if tok == "O":
                loops.append(label)
            else:
                arc = int(tok)
                if arc not in arc_positions:
                    raise PDError(f"comps names unknown arc {arc}")
                rep_arcs[arc] = label
        probe = LinkDiagram(crossings, None, (), over_in)
        for cyc in probe._components:
            hits = [rep_arcs[a] for a in cyc if a in rep_arcs]
            if len(hits) != 1:
                raise PDError(f"component through arc {min(cyc)} has {len(hits)} comps entries")
            for a in cyc:
                comp_of[a] = hits[0]
        free_loops = tuple(loops)
    return LinkDiagram(crossings, comp_of, free_loops, over_in)


def serialize_pd(d: LinkDiagram) -> str:
    """Canonical text; annotations appear only when they carry information."""
    xs = ", ".join("X[%d,%d,%d,%d]" % c for c in d.crossings)
    out = f"PD[{xs}]"
    default = LinkDiagram(d.crossings, None, (), d.over_in) if d.crossings else None
    needs_comps = bool(d.free_loops) or (default is not None and default.comp_of != d.comp_of)
    if not d.crossings:
        needs_comps = bool(d.free_loops)
    if needs_comps:
        cycles = d.component_cycles()
        toks = []
        for label in range(1, d.mu + 1):
            toks.append("O" if label in d.free_loops else str(min(cycles[label])))
        out += "; comps=[%s]" % ",".join(toks)
    if d.crossings:
        try:
            solved = LinkDiagram(d.crossings, d.comp_of, d.free_loops)
        except PDError:
            solved = None
        if solved is None or solved.over_in != d.over_in:
            out += "; overin=[%s]" % ",".join(str(o) for o in d.over_in)
    return out


# -- the Whitten action --------------------------------------------------------


def mirror_diagram(d: LinkDiagram) -> LinkDiagram:
    crossings = []
    over_in = []
    for ci, c in enumerate(d.crossings):
        o = d.over_in[ci]
        if o == 1:
            crossings.append((c[1], c[2], c[3], c[0]))
            over_in.append(3)
        else:
            crossings.append((c[3], c[0], c[1], c[2]))
            over_in.append(1)
    return LinkDiagram(crossings, d.comp_of, d.free_loops, over_in)


def reverse_components(d: LinkDiagram, labels) -> LinkDiagram:
    labels = set(labels)
    crossings = []
    over_in = []
    for ci, c in enumerate(d.crossings):
        o = d.over_in[ci]
        under_rev = d.comp_of[c[0]] in labels
        over_rev = d.comp_of[c[o]] in labels
        new_c = (c[2], c[3], c[0], c[1]) if under_rev else c
        over_arc = c[o] if not over_rev else c[4 - o]
        crossings.append(new_c)
        over_in.append(new_c.index(over_arc))
    return LinkDiagram(crossings, d.comp_of, d.free_loops, over_in)


def relabel_components(d: LinkDiagram, perm) -> LinkDiagram:
    """New label i goes on the component previously labeled perm(i)."""
    inv = perm.inverse()
    comp_of = {a: inv(l) for a, l in d.comp_of.items()}
    loops = tuple(sorted(inv(l) for l in d.free_loops))
    return LinkDiagram(d.crossings, comp_of, loops, d.over_in)


def apply_whitten(g: WhittenElement, d: LinkDiagram) -> LinkDiagram:
    """Transform the diagram: mirror, reverse chosen components, relabel."""
    if g.mu != d.mu:
        raise ValueError(f"mu mismatch: {g.mu} != {d.mu}")
    out = d
    if g.eps0 == -1:
        out = mirror_diagram(out)
    rev = {g.perm(i) for i in range(1, g.mu + 1) if g.eps[i - 1] == -1}
    if rev:
        out = reverse_components(out, rev)
    out = relabel_components(out, g.perm)
    return out


# -- sublinks -------------------------------------------------------------------


def sublink(d: LinkDiagram, keep) -> LinkDiagram:
    """Delete all components outside `keep`, splicing through strands.

    Kept components are relabeled 1..k preserving their relative order.
    """
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("keep must be nonempty")
    for label in keep:
        if not 1 <= label <= d.mu:
            raise ValueError(f"no component {label}")
    relabel = {old: i for i, old in enumerate(keep, start=1)}
    kept = set(keep)

    # union-find over arcs: splicing merges the two arcs of a surviving strand
    parent: dict[int, int] = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    crossings = []
    over_in = []
    spliced_labels = set()
    for ci, c in enumerate(d.crossings):
        cu, co = d.crossing_comps(ci)
        o = d.over_in[ci]
        if cu in kept and co in kept:
            crossings.append((ci, c))
            over_in.append(o)
        elif cu in kept:
            union(c[0], c[2])
            spliced_labels.add(cu)
        elif co in kept:
            union(c[o], c[4 - o])
            spliced_labels.add(co)
    new_crossings = [tuple(find(a) for a in c) for _, c in crossings]
    comp_of = {}
    for c in new_crossings:
        for a in c:
            comp_of[a] = relabel[d.comp_of[a]]
    loops = [relabel[l] for l in d.free_loops if l in kept]
    # a kept component whose crossings all vanished becomes a free loop
    surviving = {comp_of[a] for c in new_crossings for a in c}
    for label in keep:
        if relabel[label] not in surviving and label not in d.free_loops:
            loops.append(relabel[label])
    return LinkDiagram(new_crossings, comp_of, tuple(sorted(loops)), over_in)


# -- simplification -------------------------------------------------------------


def _splice(crossings, over_in, comp_of, free_loops, a, b, comp):
    """Merge arcs a, b (ends of a removed bigon/kink) or record a free loop."""
    if a == b:
        free_loops.append(comp)
        return
    for ci, c in enumerate(crossings):
        crossings[ci] = tuple(a if x == b else x for x in c)
    comp_of.pop(b, None)


def _try_r1(d: LinkDiagram):
    for ci, c in enumerate(d.crossings):
        a, b, cc, dd = c
        if b == cc:
            ends = (a, dd)
        elif a == b:
            ends = (dd, cc)
        elif cc == dd:
            ends = (a, b)
        elif a == dd:
            ends = (b, cc)
        else:
            continue
        comp = d.comp_of[c[0]]
        crossings = [tuple(x) for i, x in enumerate(d.crossings) if i != ci]
        over_in = [o for i, o in enumerate(d.over_in) if i != ci]
        comp_of = dict(d.comp_of)
        loops = list(d.free_loops)
        _splice(crossings, over_in, comp_of, loops, ends[0], ends[1], comp)
        kept_arcs = {x for cr in crossings for x in cr}
        comp_of = {arc: l for arc, l in comp_of.items() if arc in kept_arcs}
        # other labels may also have just lost their last crossing
        for label in range(1, d.mu + 1):
            if label not in comp_of.values() and label not in loops:
                loops.append(label)
        return LinkDiagram(crossings, comp_of, tuple(sorted(loops)), over_in)
    return None


def _faces(d: LinkDiagram):
    """Faces of the underlying 4-valent map, as dart cycles (ci, k)."""
    occ = defaultdict(list)
    for ci, c in enumerate(d.crossings):
        for k, a in enumerate(c):
            occ[a].append((ci, k))
    mate = {}
    for places in occ.values():
        (c1, k1), (c2, k2) = places
        mate[(c1, k1)] = (c2, k2)
        mate[(c2, k2)] = (c1, k1)
    faces = []
    seen = set()
    for start in mate:
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            cj, l = mate[dart]
            dart = (cj, (l + 1) % 4)
        faces.append(face)
    return faces


def _try_r2(d: LinkDiagram):
    for face in _faces(d):
        if len(face) != 2:
            continue
        (c1, k1), (c2, k2) = face
        if c1 == c2:
            continue
        x1, x2 = d.crossings[c1], d.crossings[c2]
        # the bigon's two arcs
        arcs = {x1[k1], x1[(k1 + 1) % 4]}
        if arcs != {x2[k2], x2[(k2 + 1) % 4]}:
            continue
        u, v = sorted(arcs)
        # opposite over/under: u must be on the under strand in exactly one
        def on_under(x, oi, arc):
            return arc in (x[0], x[2])
        if on_under(x1, d.over_in[c1], u) == on_under(x2, d.over_in[c2], u):
            continue
        if on_under(x1, d.over_in[c1], v) == on_under(x2, d.over_in[c2], v):
            continue
        # strand through u: entering arc at c1 opposite u... splice pairwise:
        # at each crossing the removed pair (u or v) connects two outer arcs.
        crossings = [x for i, x in enumerate(d.crossings) if i not in (c1, c2)]
        over_in = [o for i, o in enumerate(d.over_in) if i not in (c1, c2)]
        comp_of = dict(d.comp_of)
        loops = list(d.free_loops)

        def outer_ends(x, arc):
            i = x.index(arc)
            j = x.index(arc, i + 1) if x.count(arc) == 2 else None
            # positions of arc's strand at this crossing: the strand through
            # arc occupies (0,2) if under else (1,3)
            if arc in (x[0], x[2]):
                other = x[2] if arc == x[0] else x[0]
            else:
                other = x[3] if arc == x[1] else x[1]
            return other

        # the strand carrying u: outer ends at c1 and c2
        pu1, pu2 = outer_ends(x1, u), outer_ends(x2, u)
        pv1, pv2 = outer_ends(x1, v), outer_ends(x2, v)
        if {pu1, pu2} & {u, v} or {pv1, pv2} & {u, v}:
            continue  # degenerate bigon braided with itself; skip
        compu, compv = d.comp_of[u], d.comp_of[v]
        _splice(crossings, over_in, comp_of, loops, pu1, pu2, compu)
        if pv1 == pu2:
            pv1 = pu1
        if pv2 == pu2:
            pv2 = pu1
        _splice(crossings, over_in, comp_of, loops, pv1, pv2, compv)
        kept = {x for cr in crossings for x in cr}
        comp_of = {arc: l for arc, l in comp_of.items() if arc in kept}
        for label in range(1, d.mu + 1):
            if label not in comp_of.values() and label not in loops:
                loops.append(label)
        try:
            return LinkDiagram(crossings, comp_of, tuple(sorted(loops)), over_in)
        except PDError:
            continue
    return None


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Apply crossing-decreasing Reidemeister I and II moves to exhaustion."""
    while True:
        nxt = _try_r1(d) or _try_r2(d)
        if nxt is None:
            return d
        d = nxt
