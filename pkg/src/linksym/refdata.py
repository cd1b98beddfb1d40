"""Published reference values for the census: symmetry groups, linking
matrices, polynomial displays, and summary-table counts.

Polynomials are entered in the display conventions used throughout this
package: Jones in z with half-integer exponents allowed, skein values in
(a, z).  These constants drive golden tests and the table --diff mode.
"""

from __future__ import annotations

from .poly import LaurentPoly, LaurentPoly2

# |Gamma_mu|, subgroup count, conjugacy class count, by mu
GROUP_COUNTS = {
    1: (4, 5, 5),
    2: (16, 35, 27),
    3: (96, 420, 131),
    4: (768, 9417, 994),
    5: (7680, 270131, 6382),
}

# oriented-labeled link type counts by (crossings, mu), mu >= 2
LINK_TYPE_COUNTS = {
    (0, 2): 1,
    (2, 2): 2,
    (4, 2): 4,
    (5, 2): 2,
    (6, 2): 10,
    (7, 2): 38,
    (8, 2): 78,
    (6, 3): 18,
    (7, 3): 8,
    (8, 3): 200,
    (8, 4): 120,
}

# two-component links: rolfsen -> (thistlethwaite, named symmetry group)
TWO_COMPONENT_GROUPS = {
    "0^2_1": ("-", "G2"),
    "2^2_1": ("2a1", "S8,2"),
    "4^2_1": ("4a1", "S4,1"),
    "5^2_1": ("5a1", "S8,1"),
    "6^2_1": ("6a3", "S4,1"),
    "6^2_2": ("6a2", "S8,2"),
    "6^2_3": ("6a1", "S4,1"),
    "7^2_1": ("7a6", "S4,1"),
    "7^2_2": ("7a5", "S4,1"),
    "7^2_3": ("7a4", "S8,1"),
    "7^2_4": ("7a3", "S4,2"),
    "7^2_5": ("7a2", "S2,1"),
    "7^2_6": ("7a1", "S4,2"),
    "7^2_7": ("7n1", "S2,1"),
    "7^2_8": ("7n2", "S4,2"),
    "8^2_1": ("8a14", "S4,1"),
    "8^2_2": ("8a12", "S4,1"),
    "8^2_3": ("8a11", "S4,1"),
    "8^2_4": ("8a13", "S4,1"),
    "8^2_5": ("8a10", "S4,1"),
    "8^2_6": ("8a6", "S4,1"),
    "8^2_7": ("8a8", "S4,1"),
    "8^2_8": ("8a9", "S8,2"),
    "8^2_9": ("8a3", "S2,1"),
    "8^2_10": ("8a2", "S4,2"),
    "8^2_11": ("8a5", "S2,1"),
    "8^2_12": ("8a4", "S4,2"),
    "8^2_13": ("8a1", "S4,2"),
    "8^2_14": ("8a7", "S2,1"),
    "8^2_15": ("8n2", "S4,2"),
    "8^2_16": ("8n1", "S2,1"),
}

# symmetry generators for 3- and 4-component links (PI = reverse everything)
_PI3 = "(1,-1,-1,-1,e)"
_PI4 = "(1,-1,-1,-1,-1,e)"
MULTI_COMPONENT_GROUPS = {
    "6^3_1": ("6a5", 12, "D6", [_PI3, "(1,1,1,1,(12))", "(1,1,1,1,(123))"]),
    "6^3_2": ("6a4", 48, "Z2xS3wr", ["(-1,1,1,1,e)", "(1,1,1,1,(123))", "(1,-1,1,1,(12))"]),
    "6^3_3": ("6n1", 12, "D6", ["(1,1,1,1,(12))", "(1,-1,1,1,(123))"]),
    "7^3_1": ("7a7", 12, "D6", ["(1,1,1,1,(23))", "(1,1,-1,1,(123))"]),
    "8^3_1": ("8a18", 4, "D2", [_PI3, "(1,1,-1,-1,(23))"]),
    "8^3_2": ("8a17", 4, "D2", [_PI3, "(1,1,1,1,(23))"]),
    "8^3_3": ("8a15", 12, "D6", [_PI3, "(1,1,1,1,(12))", "(1,1,1,1,(123))"]),
    "8^3_4": ("8a20", 4, "D2", [_PI3, "(-1,1,1,1,(12))"]),
    "8^3_5": ("8a16", 4, "D2", ["(1,1,-1,-1,e)", "(1,-1,-1,-1,(23))"]),
    "8^3_6": ("8a19", 8, "Z2xZ2xZ2", [_PI3, "(-1,1,-1,-1,e)", "(1,1,-1,-1,(23))"]),
    "8^3_7": ("8n3", 4, "D2", [_PI3, "(1,1,1,1,(23))"]),
    "8^3_8": ("8n4", 4, "D2", [_PI3, "(1,1,-1,-1,(23))"]),
    "8^3_9": ("8n5", 8, "Z2xZ2xZ2", [_PI3, "(1,1,1,1,(23))", "(1,1,-1,-1,e)"]),
    "8^3_10": ("8n6", 4, "D2", [_PI3, "(1,1,1,1,(12))"]),
    "8^4_1": ("8a21", 16, "Z2xD4", [_PI4, "(1,1,1,1,1,(23))", "(1,1,1,1,1,(1243))"]),
    "8^4_2": ("8n7", 16, "D8", ["(1,1,1,1,1,(13)(24))", "(1,1,1,-1,1,(1243))"]),
    "8^4_3": ("8n8", 32, "Z2xZ2xD4",
              [_PI4, "(-1,1,1,1,1,(23))", "(-1,1,1,1,1,(1243))", "(-1,-1,1,1,-1,e)"]),
}

# the names whose isomorphism labels the two-component catalog implies
TWO_COMPONENT_LABELS = {
    "trivial": "trivial",
    "S2,1": "Z2",
    "S4,1": "D2",
    "S4,2": "D2",
    "S4,3": "D2",
    "S8,1": "D4",
    "S8,2": "D4",
    "S8,3": "Z2xZ2xZ2",
    "G2": "Z2xD4",
}

# published linking matrices for 3- and 4-component links
LINKING_MATRICES = {
    "6^3_1": [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]],
    "6^3_2": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    "6^3_3": [[0, 1, -1], [1, 0, -1], [-1, -1, 0]],
    "7^3_1": [[0, -1, -1], [-1, 0, 1], [-1, 1, 0]],
    "8^3_1": [[0, -1, 1], [-1, 0, 2], [1, 2, 0]],
    "8^3_2": [[0, -1, -1], [-1, 0, -2], [-1, -2, 0]],
    "8^3_3": [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]],
    "8^3_4": [[0, 0, 2], [0, 0, -2], [2, -2, 0]],
    "8^3_5": [[0, 0, 0], [0, 0, -1], [0, -1, 0]],
    "8^3_6": [[0, 1, -1], [1, 0, 0], [-1, 0, 0]],
    "8^3_7": [[0, 1, 1], [1, 0, -2], [1, -2, 0]],
    "8^3_8": [[0, 1, -1], [1, 0, -2], [-1, -2, 0]],
    "8^3_9": [[0, 0, 0], [0, 0, 2], [0, 2, 0]],
    "8^3_10": [[0, 0, 2], [0, 0, 2], [2, 2, 0]],
    "8^4_1": [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]],
    "8^4_2": [[0, 1, -1, 0], [1, 0, 0, 1], [-1, 0, 0, 1], [0, 1, 1, 0]],
    "8^4_3": [[0, 1, -1, 0], [1, 0, 0, -1], [-1, 0, 0, 1], [0, -1, 1, 0]],
}

_J = LaurentPoly.parse

# Jones display pairs: name -> (gamma text, base value, transformed value)
JONES_DISPLAYS = {
    "7^2_7": ("(-1,-1,1,e)",
              _J("z^{-15/2} - z^{-13/2} - z^{-9/2} - z^{-5/2}"),
              _J("-z^{-7/2} - z^{-3/2} - z^{1/2} + z^{3/2}")),
    "8^2_11": ("(-1,-1,1,e)",
               _J("-z^{9/2} + 3z^{7/2} - z^{-7/2} - 4z^{5/2} + z^{-5/2} + 5z^{3/2}"
                  " - 4z^{-3/2} - 5z^{1/2} + 4z^{-1/2}"),
               _J("-4z^{-9/2} + z^{-7/2} - z^{-5/2} - z^{-21/2} + 3z^{-19/2}"
                  " - 4z^{-17/2} + 5z^{-15/2} - 5z^{-13/2} + 4z^{-11/2}")),
    "8^2_16": ("(-1,-1,1,e)",
               _J("2z^{-9/2} - 2z^{-7/2} + 2z^{-5/2} - 2z^{-3/2} - 2z^{-11/2}"
                  " - z^{1/2} + z^{-1/2}"),
               _J("-2z^{-9/2} + 2z^{-7/2} - 2z^{-5/2} + 2z^{-3/2} - z^{-13/2}"
                  " + z^{-11/2} - 2z^{-1/2}")),
    "7^2_8": ("(-1,1,1,e)",
              _J("-z^{-9/2} + z^{-7/2} - 2z^{-5/2} + z^{-3/2} + z^{-11/2} - 2z^{-1/2}"),
              _J("-z^{9/2} + z^{7/2} - 2z^{5/2} + z^{3/2} + z^{11/2} - 2z^{1/2}")),
    "8^2_10": ("(-1,1,1,e)",
               _J("-z^{9/2} + 3z^{7/2} - z^{-7/2} - 5z^{5/2} + 2z^{-5/2} + 5z^{3/2}"
                  " - 4z^{-3/2} - 6z^{1/2} + 5z^{-1/2}"),
               _J("-z^{-9/2} - z^{7/2} + 3z^{-7/2} + 2z^{5/2} - 5z^{-5/2} - 4z^{3/2}"
                  " + 5z^{-3/2} + 5z^{1/2} - 6z^{-1/2}")),
    "8^2_15": ("(-1,1,1,e)",
               _J("-z^{-7/2} - z^{5/2} + z^{-5/2} + z^{3/2} - z^{-3/2} - 2z^{1/2}"
                  " + z^{-1/2}"),
               _J("-z^{7/2} + z^{5/2} - z^{-5/2} - z^{3/2} + z^{-3/2} + z^{1/2}"
                  " - 2z^{-1/2}")),
}

# Jones displays used to pin chirality of multi-component records; the
# transformed value belongs to every listed ruled-out mirror element.
JONES_MIRROR_DISPLAYS = {
    "8^3_5": (_J("-z^{-6} + 3z^{-5} - 4z^{-4} + 6z^{-3} - z^2 - 5z^{-2} + 3z + 6z^{-1} - 3"),
              _J("-z^{-5} + 3z^{-4} - z^3 - 3z^{-3} + 3z^2 + 6z^{-2} - 4z - 5z^{-1} + 6")),
    "8^3_9": (_J("z^7 - 2z^6 + 3z^5 - 2z^4 + 4z^3 - 2z^2 + 2z"),
              _J("2z^5 - 2z^4 + 4z^3 - 2z^2 + 3z + z^{-1} - 2")),
    "8^3_10": (_J("z^9 + z^7 + z^6 + z^2"),
               _J("z^{10} + z^6 + z^5 + z^3")),
    "8^4_1": (_J("4z^{9/2} - 6z^{7/2} + 3z^{5/2} - z^{3/2} - z^{19/2} + z^{17/2}"
                 " - 5z^{15/2} + 4z^{13/2} - 7z^{11/2}"),
              _J("-5z^{9/2} + z^{7/2} - z^{5/2} - z^{21/2} + 3z^{19/2} - 6z^{17/2}"
                 " + 4z^{15/2} - 7z^{13/2} + 4z^{11/2}")),
    "8^4_2": (_J("-4z^{9/2} + z^{7/2} - 4z^{5/2} + 2z^{3/2} - z^{13/2} + z^{11/2}"
                 " - 3z^{1/2}"),
              _J("2z^{9/2} - 4z^{7/2} + z^{5/2} - 4z^{3/2} - 3z^{11/2} + z^{1/2}"
                 " - z^{-1/2}")),
}

def _h(text: str) -> LaurentPoly2:
    """Parse a sum of 'c a^i z^j' terms (i, j integers)."""
    import re

    out: dict[tuple[int, int], int] = {}
    token = re.compile(
        r"\s*([+-]?)\s*(\d+)?\s*(?:a\^?\{?(-?\d+)?\}?)?\s*(?:z\^?\{?(-?\d+)?\}?)?"
    )
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = token.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad term at {text[pos:pos+16]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        seg = text[pos:m.end()]
        ai = int(m.group(3)) if m.group(3) else (1 if "a" in seg else 0)
        zi = int(m.group(4)) if m.group(4) else (1 if "z" in seg else 0)
        key = (2 * ai, 2 * zi)
        out[key] = out.get(key, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly2(out)


# skein-polynomial display pair for 8^3_4 under (-1,1,1,-1,e)
HOMFLY_DISPLAY_834 = (
    "(-1,1,1,-1,e)",
    _h("a^2 z^4 + a^{-2} z^4 + 3 a^2 z^2 + 3 a^{-2} z^2 + a^2 z^{-2} + a^{-2} z^{-2}"
       " + 4 a^2 + 4 a^{-2} - z^6 - 5 z^4 - 10 z^2 - 2 z^{-2} - 8"),
    _h("a^4 + a^{-4} - 2 a^2 z^2 + a^2 z^{-2} - 2 a^{-2} z^2 + a^{-2} z^{-2}"
       " + z^4 - 2 z^{-2} - 2"),
)

# Conway polynomial display pairs under (-1,-1,1,e)
CONWAY_DISPLAYS = {
    "4^2_1": (_J("2z"), _J("z^3 + 2z")),
    "6^2_1": (_J("-z^5 - 4z^3 - 3z"), _J("-3z")),
    "8^2_1": (_J("-z^7 - 6z^5 - 10z^3 - 4z"), _J("-4z")),
    "8^2_2": (_J("2z^5 + 7z^3 + 4z"), _J("3z^3 + 4z")),
    "8^2_4": (_J("4z^3 + 4z"), _J("2z^5 + 6z^3 + 4z")),
}

# the seventeen links with pure exchange symmetry
PURE_EXCHANGE_LINKS = [
    "2^2_1", "4^2_1", "5^2_1", "6^2_1", "6^2_2", "6^2_3", "7^2_1", "7^2_2",
    "7^2_3", "8^2_1", "8^2_2", "8^2_3", "8^2_4", "8^2_5", "8^2_6", "8^2_7", "8^2_8",
]

# links that are not purely invertible (both are invertible with permutation)
NOT_PURELY_INVERTIBLE = ["6^3_2", "8^3_5"]

ALL_LINKS = list(TWO_COMPONENT_GROUPS) + list(MULTI_COMPONENT_GROUPS)
