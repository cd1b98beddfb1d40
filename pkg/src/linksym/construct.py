"""Programmatic diagram constructions: braid closures, rational links, pretzels.

Builders work with "semi-oriented" crossings (under strand on the 0-2
diagonal, either flow) and fix directions at the end, so twist-region
assembly never has to track global orientation.
"""

from __future__ import annotations

from .diagram import LinkDiagram, PDError

__all__ = [
    "from_semioriented",
    "braid_closure",
    "rational_link",
    "pretzel_link",
    "unknot_diagram",
    "unlink_diagram",
    "twist_annulus",
]


def from_semioriented(crossings, comp_of=None, free_loops=()) -> LinkDiagram:
    """Build a diagram from crossings whose under strand is the 0-2 diagonal.

    The builders only know the unoriented structure; this helper directs
    each component deterministically, rotates tuples by 0 or 2 so position 0
    becomes the incoming under arc, and derives the incoming-over position.
    """
    crossings = [tuple(c) for c in crossings]
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(crossings):
        for k, a in enumerate(c):
            occ.setdefault(a, []).append((ci, k))
    for a, places in occ.items():
        if len(places) != 2:
            raise PDError(f"arc {a} appears {len(places)} times (expected 2)")

    # head[a]: the occurrence index (0 or 1) the arc flows into
    head: dict[int, int] = {}
    for start in sorted(occ):
        if start in head:
            continue
        arc, into = start, 1
        while arc not in head:
            head[arc] = into
            ci, k = occ[arc][into]
            exit_pos = (k + 2) % 4
            nxt = crossings[ci][exit_pos]
            # next arc flows out of (ci, exit_pos); it flows into its other end
            out_idx = 0 if occ[nxt][0] == (ci, exit_pos) else 1
            arc, into = nxt, 1 - out_idx

    def flows_into(arc, ci, k):
        return occ[arc][head[arc]] == (ci, k)

    rotated = []
    over_in = []
    for ci, c in enumerate(crossings):
        if flows_into(c[0], ci, 0):
            cc = c
            shift = 0
        elif flows_into(c[2], ci, 2):
            cc = (c[2], c[3], c[0], c[1])
            shift = 2
        else:
            raise PDError(f"crossing {ci}: no incoming under arc")
        o = None
        for k in (1, 3):
            orig_k = (k + shift) % 4
            if flows_into(c[orig_k], ci, orig_k):
                o = k
        if o is None:
            raise PDError(f"crossing {ci}: over strand has no incoming end")
        rotated.append(cc)
        over_in.append(o)
    return LinkDiagram(rotated, comp_of, free_loops, over_in)


def unknot_diagram() -> LinkDiagram:
    return LinkDiagram([], None, 1)


def unlink_diagram(mu: int) -> LinkDiagram:
    return LinkDiagram([], None, mu)


def braid_closure(word, strands: int) -> LinkDiagram:
    """Close a braid word; letter +i puts the strand entering at position i
    over the one at position i+1, both oriented downward.  Positive letters
    produce positive crossings.
    """
    if not word:
        return unlink_diagram(strands)
    arc = 0

    def fresh():
        nonlocal arc
        arc += 1
        return arc

    top = [fresh() for _ in range(strands)]
    cur = list(top)
    crossings = []
    over_in = []
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"letter {letter} outside braid group on {strands} strands")
        left, right = cur[i], cur[i + 1]
        nl, nr = fresh(), fresh()
        if letter > 0:
            # under strand: upper-right -> lower-left; over: upper-left -> lower-right
            crossings.append((right, nr, nl, left))
            over_in.append(3)
        else:
            crossings.append((left, right, nr, nl))
            over_in.append(1)
        cur[i], cur[i + 1] = nl, nr
    # closure: identify bottom arcs with top arcs
    rename = {}
    loops = 0
    for i in range(strands):
        if cur[i] == top[i]:
            loops += 1  # untouched strand closes into a crossingless circle
        else:
            rename[cur[i]] = top[i]
    crossings = [tuple(rename.get(a, a) for a in c) for c in crossings]
    return LinkDiagram(crossings, None, loops, over_in)


class _TangleBuilder:
    """Rational-tangle scratchpad tracking four boundary arc ends."""

    def __init__(self, alloc):
        self.alloc = alloc
        self.crossings: list[tuple[int, int, int, int]] = []
        a, b = alloc(), alloc()
        # 0-tangle: two horizontal strands: nw-ne and sw-se
        self.nw, self.ne, self.sw, self.se = a, a, b, b

    def twist_bottom(self, sign: int):
        """One horizontal twist of the two bottom ends (sw, se)."""
        nl, nr = self.alloc(), self.alloc()
        if sign > 0:
            self.crossings.append((self.se, nr, nl, self.sw))
        else:
            self.crossings.append((self.sw, self.se, nr, nl))
        self.sw, self.se = nl, nr

    def twist_right(self, sign: int):
        """One vertical twist of the two right ends (ne, se)."""
        nt, nb = self.alloc(), self.alloc()
        if sign > 0:
            self.crossings.append((self.se, self.ne, nt, nb))
        else:
            self.crossings.append((self.ne, nt, nb, self.se))
        self.ne, self.se = nt, nb


def _continued_fraction(p: int, q: int) -> list[int]:
    """Positive continued fraction [a1, a2, ...] with p/q = a1 + 1/(a2 + ...)."""
    if q <= 0 or p <= q:
        raise ValueError("expect p > q > 0")
    out = []
    while q:
        out.append(p // q)
        p, q = q, p % q
    return out


def rational_link(p: int, q: int) -> LinkDiagram:
    """Alternating 4-plat diagram of the two-bridge link or knot p/q.

    Built from the positive continued fraction of p/q by alternating runs
    of bottom and right twists, closing with the numerator closure.
    """
    cf = _continued_fraction(abs(p), abs(q) % abs(p))
    if len(cf) % 2 == 0:
        # odd-length normal form: [..., a] -> [..., a-1, 1]
        cf[-1] -= 1
        cf.append(1)
        if cf[-2] == 0:
            cf[-2:] = []
            cf[-1] += 1
    arc = 0

    def alloc():
        nonlocal arc
        arc += 1
        return arc

    t = _TangleBuilder(alloc)
    # innermost coefficient first; odd cf positions twist the right pair,
    # even positions the bottom pair
    for j, a in enumerate(reversed(cf)):
        for _ in range(a):
            if j % 2 == 0:
                t.twist_right(+1)
            else:
                t.twist_bottom(+1)
    # numerator closure: join nw-ne and sw-se
    parent: dict[int, int] = {}

    def find(a):
        while a in parent:
            a = parent[a]
        return a

    for x, y in ((t.nw, t.ne), (t.sw, t.se)):
        rx, ry = find(x), find(y)
        if rx == ry:
            raise ValueError("degenerate closure (free circle); use larger p/q")
        parent[ry] = rx
    crossings = [tuple(find(a) for a in c) for c in t.crossings]
    return from_semioriented(crossings)


def pretzel_link(twists) -> LinkDiagram:
    """The pretzel link with the given vertical twist counts (signs allowed)."""
    twists = list(twists)
    if len(twists) < 2 or any(t == 0 for t in twists):
        raise ValueError("need at least two nonzero twist regions")
    arc = 0

    def alloc():
        nonlocal arc
        arc += 1
        return arc

    crossings = []
    tops = []  # (nw, ne) of each region
    bots = []  # (sw, se)
    for t in twists:
        top_l, top_r = alloc(), alloc()
        cur_l, cur_r = top_l, top_r
        for _ in range(abs(t)):
            nl, nr = alloc(), alloc()
            if t > 0:
                crossings.append((cur_r, nr, nl, cur_l))
            else:
                crossings.append((cur_l, cur_r, nr, nl))
            cur_l, cur_r = nl, nr
        tops.append((top_l, top_r))
        bots.append((cur_l, cur_r))
    k = len(twists)
    rename = {}

    def find(a):
        while a in rename:
            a = rename[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            rename[rb] = ra

    for i in range(k):
        j = (i + 1) % k
        union(tops[i][1], tops[j][0])  # ne_i joins nw_{i+1}
        union(bots[i][1], bots[j][0])  # se_i joins sw_{i+1}
    crossings = [tuple(find(a) for a in c) for c in crossings]
    return from_semioriented(crossings)


def twist_annulus(n: int) -> LinkDiagram:
    """Closure of n full horizontal twists of two parallel strands: T(2, n)."""
    return braid_closure([1 if n > 0 else -1] * abs(n), 2)
