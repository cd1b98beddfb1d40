"""Exact arithmetic in the Whitten group of a mu-component link.

The group is Z2 x (Z2^mu semidirect S_mu): a mirror sign, one reversal sign
per component, and a permutation of component labels.  Composition is fixed
so that acting with compose(a, b) equals acting with b first, then a; the
action axiom is locked by tests against the linking-matrix action.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import reduce

__all__ = [
    "Permutation",
    "WhittenElement",
    "Subgroup",
    "identity",
    "compose",
    "inverse",
    "conjugate",
    "enumerate_gamma",
    "gamma_order",
    "generate",
    "conjugate_subgroup",
    "coset_index",
    "element_order",
    "pure_invertibility",
    "pure_exchange",
]


_CYCLE_RE = re.compile(r"\(([0-9\s,]+)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1..mu}, stored as a 0-indexed tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @property
    def mu(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of i under the permutation, 1-based."""
        return self.images[i - 1] + 1

    @staticmethod
    def identity(mu: int) -> "Permutation":
        return Permutation(tuple(range(mu)))

    @staticmethod
    def from_cycles(text: str, mu: int) -> "Permutation":
        """Parse cycle notation like "(123)" or "(12)(34)"; "e" is the identity.

        Component indices are single digits (mu <= 9 everywhere here).
        """
        text = text.strip()
        images = list(range(mu))
        if text in ("e", "()", ""):
            return Permutation(tuple(images))
        pos = 0
        for m in _CYCLE_RE.finditer(text):
            cyc = [int(c) - 1 for c in re.findall(r"[0-9]", m.group(1))]
            if len(cyc) < 2 or len(set(cyc)) != len(cyc) or max(cyc) >= mu:
                raise ValueError(f"bad cycle {m.group(0)!r} for mu={mu}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
            pos = m.end()
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"unparsed permutation text: {text!r}")
        if pos == 0:
            raise ValueError(f"unparsed permutation text: {text!r}")
        return Permutation(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest element."""
        seen = [False] * self.mu
        out = []
        for i in range(self.mu):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + "".join(str(i) for i in c) + ")" for c in cyc)

    def after(self, first: "Permutation") -> "Permutation":
        """The permutation i -> self(first(i))."""
        return Permutation(tuple(self.images[first.images[i]] for i in range(self.mu)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.mu
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_transposition(self) -> bool:
        cyc = self.cycles()
        return len(cyc) == 1 and len(cyc[0]) == 2

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r})"


@dataclass(frozen=True, slots=True)
class WhittenElement:
    """A candidate symmetry (eps0, eps_1..eps_mu, p).

    eps0 = -1 mirrors the ambient space, eps_i = -1 reverses the component
    that receives label i, and p relabels: label i ends up on the component
    previously labeled p(i).
    """

    eps0: int
    eps: tuple[int, ...]
    perm: Permutation

    def __post_init__(self):
        if self.eps0 not in (-1, 1) or any(e not in (-1, 1) for e in self.eps):
            raise ValueError("signs must be +/-1")
        if len(self.eps) != self.perm.mu:
            raise ValueError("sign vector and permutation size differ")

    @property
    def mu(self) -> int:
        return len(self.eps)

    def sort_key(self):
        # +1 sorts before -1 so the identity is always first.
        return (self.eps0 < 0, tuple(e < 0 for e in self.eps), self.perm.images)

    def __str__(self):
        signs = ",".join("1" if e > 0 else "-1" for e in (self.eps0,) + self.eps)
        return f"({signs},{self.perm.cycle_string()})"

    def __repr__(self):
        return f"W{self}"

    @staticmethod
    def parse(text: str) -> "WhittenElement":
        """Parse "(1,-1,-1,e)" or "(1,1,-1,1,(123))" style element text."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad element text: {text!r}")
        body = body[1:-1]
        m = re.match(r"^\s*((?:[+-]?1\s*,\s*)+)(.*)$", body)
        if not m:
            raise ValueError(f"bad element text: {text!r}")
        signs = [int(s) for s in m.group(1).rstrip(", \t").split(",")]
        perm_text = m.group(2).strip()
        mu = len(signs) - 1
        return WhittenElement(signs[0], tuple(signs[1:]), Permutation.from_cycles(perm_text, mu))

    def to_json(self):
        return [self.eps0, list(self.eps), [i + 1 for i in self.perm.images]]

    @staticmethod
    def from_json(data) -> "WhittenElement":
        eps0, eps, images = data
        return WhittenElement(eps0, tuple(eps), Permutation(tuple(i - 1 for i in images)))


def identity(mu: int) -> WhittenElement:
    return WhittenElement(1, (1,) * mu, Permutation.identity(mu))


def pure_invertibility(mu: int) -> WhittenElement:
    return WhittenElement(1, (-1,) * mu, Permutation.identity(mu))


def pure_exchange(mu: int, i: int, j: int) -> WhittenElement:
    return WhittenElement(1, (1,) * mu, Permutation.from_cycles(f"({i}{j})", mu))


def compose(a: WhittenElement, b: WhittenElement) -> WhittenElement:
    """Product a*b, the element acting as b first and then a."""
    if a.mu != b.mu:
        raise ValueError(f"mu mismatch: {a.mu} != {b.mu}")
    eps = tuple(a.eps[i] * b.eps[a.perm.images[i]] for i in range(a.mu))
    return WhittenElement(a.eps0 * b.eps0, eps, b.perm.after(a.perm))


def inverse(a: WhittenElement) -> WhittenElement:
    inv = a.perm.inverse()
    eps = tuple(a.eps[inv.images[i]] for i in range(a.mu))
    return WhittenElement(a.eps0, eps, inv)


def conjugate(g: WhittenElement, x: WhittenElement) -> WhittenElement:
    """g * x * g^-1."""
    return compose(compose(g, x), inverse(g))


def element_order(a: WhittenElement) -> int:
    n = 1
    x = a
    e = identity(a.mu)
    while x != e:
        x = compose(x, a)
        n += 1
    return n


def gamma_order(mu: int) -> int:
    return 2 ** (mu + 1) * reduce(lambda a, b: a * b, range(1, mu + 1), 1)


def enumerate_gamma(mu: int) -> list[WhittenElement]:
    """All elements of the Whitten group in canonical (lexicographic) order."""
    if not 1 <= mu <= 5:
        raise ValueError(f"mu={mu} outside supported range 1..5")
    perms = sorted(itertools.permutations(range(mu)))
    out = []
    for eps0 in (1, -1):
        for eps in itertools.product((1, -1), repeat=mu):
            for p in perms:
                out.append(WhittenElement(eps0, eps, Permutation(p)))
    return sorted(out, key=WhittenElement.sort_key)


@dataclass(frozen=True)
class Subgroup:
    """An explicit subgroup of the Whitten group: a closed, canonical element set."""

    mu: int
    elements: tuple[WhittenElement, ...]
    generators: tuple[WhittenElement, ...] = ()
    name: str | None = None

    @staticmethod
    def from_elements(mu, elements, generators=(), name=None) -> "Subgroup":
        return Subgroup(mu, tuple(sorted(set(elements), key=WhittenElement.sort_key)),
                        tuple(generators), name)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: WhittenElement) -> bool:
        return x in self.element_set()

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def __le__(self, other: "Subgroup") -> bool:
        return self.element_set() <= other.element_set()

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.mu == other.mu and self.elements == other.elements

    def __hash__(self):
        return hash((self.mu, self.elements))

    def is_closed(self) -> bool:
        s = self.element_set()
        if identity(self.mu) not in s:
            return False
        return all(compose(a, b) in s for a in s for b in s) and all(inverse(a) in s for a in s)

    def to_json(self):
        data = {"mu": self.mu, "elements": [e.to_json() for e in self.elements]}
        if self.generators:
            data["generators"] = [g.to_json() for g in self.generators]
        if self.name:
            data["name"] = self.name
        return data

    @staticmethod
    def from_json(data) -> "Subgroup":
        return Subgroup.from_elements(
            data["mu"],
            [WhittenElement.from_json(e) for e in data["elements"]],
            [WhittenElement.from_json(g) for g in data.get("generators", [])],
            data.get("name"),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @staticmethod
    def loads(text: str) -> "Subgroup":
        return Subgroup.from_json(json.loads(text))


def generate(mu: int, gens) -> Subgroup:
    """Smallest subgroup containing the given elements."""
    gens = tuple(gens)
    for g in gens:
        if g.mu != mu:
            raise ValueError("generator has wrong mu")
    seen = {identity(mu)}
    frontier = [identity(mu)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                for y in (compose(x, g), compose(g, x)):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return Subgroup.from_elements(mu, seen, generators=gens)


def conjugate_subgroup(h: Subgroup, g: WhittenElement) -> Subgroup:
    if h.mu != g.mu:
        raise ValueError("mu mismatch")
    return Subgroup.from_elements(
        h.mu,
        (conjugate(g, x) for x in h.elements),
        generators=tuple(conjugate(g, x) for x in h.generators),
    )


def coset_index(h: Subgroup) -> int:
    """Number of cosets of h in the full Whitten group."""
    full = gamma_order(h.mu)
    if full % h.order:
        raise ValueError("order does not divide the group order; not a subgroup?")
    return full // h.order
