"""Two-cabling a component: the satellite construction behind exchange tests.

The chosen component is replaced by its two blackboard-framed parallel
copies; Reidemeister-I kinks inserted beforehand cancel the component's
self-writhe so the companion annulus is 0-framed.  An optional two-crossing
clasp then turns the pair into a Hopf link inside the tube.  The clasp's
over-strand is the copy on the left of the direction of travel, so the
pattern is tied to the companion's orientation.
"""

from __future__ import annotations

from .diagram import LinkDiagram

__all__ = ["cable2", "insert_kink"]


def insert_kink(d: LinkDiagram, arc: int, sign: int) -> LinkDiagram:
    """Add a Reidemeister-I kink of the given sign on an arc."""
    hi = max(d.arcs) if d.arcs else 0
    k, a2 = hi + 1, hi + 2
    crossings = []
    over_in = []
    # the subdivided arc keeps its name on the incoming piece
    for ci, c in enumerate(d.crossings):
        o = d.over_in[ci]
        # the occurrence of `arc` flowing INTO a crossing belongs to the
        # outgoing piece a2
        cc = list(c)
        for kpos, x in enumerate(c):
            if x == arc and (kpos == 0 or kpos == o):
                cc[kpos] = a2
        crossings.append(tuple(cc))
        over_in.append(o)
    if sign > 0:
        crossings.append((arc, a2, k, k))
        over_in.append(3)
    else:
        crossings.append((k, arc, a2, k))
        over_in.append(1)
    comp_of = dict(d.comp_of)
    label = comp_of[arc]
    comp_of[k] = label
    comp_of[a2] = label
    return LinkDiagram(crossings, comp_of, d.free_loops, over_in)


def cable2(d: LinkDiagram, i: int, clasp: bool = False, framing: int = 0) -> LinkDiagram:
    """Replace component i by two parallel copies (plus clasp).

    Kinks first normalize the component's self-writhe to `framing`, so the
    companion annulus carries that fixed framing whatever diagram was given;
    the construction is the same on every component, as the exchange test
    requires.  The left copy keeps label i; the right copy becomes component
    mu+1.
    """
    if not 1 <= i <= d.mu:
        raise ValueError(f"no component {i}")
    if i in d.free_loops:
        base = d
        arcs_i = ()
        if framing:
            raise ValueError("framed cable of a crossingless circle needs a kink site")
    else:
        # normalize the blackboard framing
        w = sum(
            d.crossing_sign(ci)
            for ci in range(len(d.crossings))
            if d.crossing_comps(ci) == (i, i)
        )
        base = d
        while w != framing:
            arc = min(base.arcs_of(i))
            base = insert_kink(base, arc, -1 if w > framing else 1)
            w += -1 if w > framing else 1
        arcs_i = base.arcs_of(i)

    L = lambda a: ("L", a)
    R = lambda a: ("R", a)
    crossings: list[tuple] = []
    over_in: list[int] = []
    comp_of: dict = {}
    new_label = d.mu + 1
    fresh_n = 0

    def fresh():
        nonlocal fresh_n
        fresh_n += 1
        return ("m", fresh_n)

    for a, lab in base.comp_of.items():
        if lab == i:
            comp_of[L(a)] = i
            comp_of[R(a)] = new_label
        else:
            comp_of[a] = lab

    for ci, c in enumerate(base.crossings):
        o = base.over_in[ci]
        cu, co = base.crossing_comps(ci)
        a, uc = c[0], c[2]
        x_in, x_out = c[o], c[4 - o]
        if cu != i and co != i:
            crossings.append(c)
            over_in.append(o)
        elif cu == i and co != i:
            # the over strand crosses both copies; from the west it meets the
            # left copy (west of northbound travel) first
            m = fresh()
            comp_of[m] = co
            u1, u2 = (L, R) if o == 3 else (R, L)
            if o == 3:
                crossings.append((u1(a), m, u1(uc), x_in))
                crossings.append((u2(a), x_out, u2(uc), m))
            else:
                crossings.append((u1(a), x_in, u1(uc), m))
                crossings.append((u2(a), m, u2(uc), x_out))
            over_in.extend((o, o))
        elif cu != i and co == i:
            m = fresh()
            comp_of[m] = cu
            o1, o2 = (R, L) if o == 3 else (L, R)
            if o == 3:
                crossings.append((a, o1(x_out), m, o1(x_in)))
                crossings.append((m, o2(x_out), uc, o2(x_in)))
            else:
                crossings.append((a, o1(x_in), m, o1(x_out)))
                crossings.append((m, o2(x_in), uc, o2(x_out)))
            over_in.extend((o, o))
        else:
            # self-crossing: a 2x2 grid of crossings
            s1, s2, t1, t2 = fresh(), fresh(), fresh(), fresh()
            u1, u2 = (L, R) if o == 3 else (R, L)
            o1, o2 = (R, L) if o == 3 else (L, R)
            comp_of[s1] = i if u1 is L else new_label
            comp_of[s2] = i if u2 is L else new_label
            comp_of[t1] = i if o1 is L else new_label
            comp_of[t2] = i if o2 is L else new_label
            if o == 3:
                crossings.append((u1(a), t1, s1, o1(x_in)))
                crossings.append((s1, t2, u1(uc), o2(x_in)))
                crossings.append((u2(a), o1(x_out), s2, t1))
                crossings.append((s2, o2(x_out), u2(uc), t2))
            else:
                crossings.append((u1(a), o1(x_in), s1, t1))
                crossings.append((s1, o2(x_in), u1(uc), t2))
                crossings.append((u2(a), t1, s2, o1(x_out)))
                crossings.append((s2, t2, u2(uc), o2(x_out)))
            over_in.extend((o, o, o, o))

    free_loops = list(d.free_loops)
    if i in d.free_loops:
        # cabling a crossingless circle: two circles, or a bare Hopf clasp
        if clasp:
            lA, lB, rA, rB = ("cl", 1), ("cl", 2), ("cl", 3), ("cl", 4)
            crossings.extend([(rA, lB, rB, lA), (lB, rA, lA, rB)])
            over_in.extend((3, 3))
            comp_of[lA] = comp_of[lB] = i
            comp_of[rA] = comp_of[rB] = new_label
            free_loops.remove(i)
        else:
            free_loops.append(new_label)
    elif clasp:
        arc = min(arcs_i)
        o1, u1, al2, ar2 = fresh(), fresh(), fresh(), fresh()
        comp_of[o1] = comp_of[al2] = i
        comp_of[u1] = comp_of[ar2] = new_label
        # incoming pieces keep names L(arc), R(arc); outgoing pieces renamed
        def retarget(old, new):
            for ci, c in enumerate(crossings):
                o = over_in[ci]
                cc = list(c)
                for kpos, x in enumerate(c):
                    if x == old and (kpos == 0 or kpos == o):
                        cc[kpos] = new
                crossings[ci] = tuple(cc)

        retarget(L(arc), al2)
        retarget(R(arc), ar2)
        crossings.append((R(arc), o1, u1, L(arc)))
        crossings.append((o1, ar2, al2, u1))
        over_in.extend((3, 3))

    numbering = {}
    for c in crossings:
        for x in c:
            if x not in numbering:
                numbering[x] = len(numbering) + 1
    out_crossings = [tuple(numbering[x] for x in c) for c in crossings]
    out_comp = {numbering[x]: lab for x, lab in comp_of.items() if x in numbering}
    return LinkDiagram(out_crossings, out_comp, tuple(sorted(free_loops)), over_in)
