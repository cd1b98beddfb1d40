"""The invariant filter: the best symmetry-group upper bound computable here.

Candidates survive the linking-matrix stabilizer, per-component knot type
and self-writhe stages, then exact polynomial profile comparison, then
(optionally) clasped two-cable comparisons.  Whatever survives is reported;
if the surviving set fails to be a subgroup, the report falls back to the
largest subgroup inside it and says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bracket import ResourceLimitError, jones
from .cable import cable2
from .census import LinkRecord, census_by_name
from .diagram import LinkDiagram, apply_whitten, simplify, sublink
from .homfly import homflypt
from .linkmatrix import LinkingMatrix, act_matrix, stabilizer_bruteforce
from .poly import LaurentPoly, LaurentPoly2
from .whitten import (
    Subgroup,
    WhittenElement,
    compose,
    coset_index,
    enumerate_gamma,
    generate,
    identity,
    inverse,
)

__all__ = ["InvariantProfile", "FilterReport", "profile", "component_fingerprint",
           "candidate_stage", "sigma_prime", "compare_to_truth", "count_link_types"]

JONES_LIMIT = 40
HOMFLY_LIMIT = 24
CABLE_JONES_LIMIT = 44


@dataclass(frozen=True)
class InvariantProfile:
    linking: LinkingMatrix
    self_writhe: int | None
    jones: LaurentPoly
    homfly: LaurentPoly2 | None
    fingerprints: tuple[LaurentPoly2, ...]


def component_fingerprint(d: LinkDiagram, i: int, limit: int = HOMFLY_LIMIT) -> LaurentPoly2:
    """Knot-type certificate of one component: the skein polynomial of the
    knot obtained by forgetting every other component."""
    return homflypt(simplify(sublink(d, {i})), limit)


def profile(d: LinkDiagram, alternating: bool = False,
            jones_limit: int = JONES_LIMIT, homfly_limit: int = HOMFLY_LIMIT) -> InvariantProfile:
    """All implemented invariants of the oriented labeled link."""
    try:
        hp = homflypt(d, homfly_limit)
    except ResourceLimitError:
        hp = None
    return InvariantProfile(
        linking=d.linking_matrix(),
        self_writhe=d.self_writhe() if alternating else None,
        jones=jones(d, jones_limit),
        homfly=hp,
        fingerprints=tuple(component_fingerprint(d, i) for i in range(1, d.mu + 1)),
    )


def candidate_stage(d: LinkDiagram, alternating: bool = False) -> list[WhittenElement]:
    """Cheap exclusions: linking-matrix stabilizer, component knot types,
    and (for reduced alternating diagrams) the self-writhe sign."""
    A = d.linking_matrix()
    stab = stabilizer_bruteforce(A)
    fps = [component_fingerprint(d, i) for i in range(1, d.mu + 1)]
    mirrored = [f.mirror() for f in fps]
    s = d.self_writhe() if alternating else 0
    out = []
    for g in stab.elements:
        if alternating and s != 0 and g.eps0 == -1:
            continue
        ok = True
        for i in range(d.mu):
            want = fps[g.perm.images[i]] if g.eps0 == 1 else mirrored[g.perm.images[i]]
            if fps[i] != want:
                ok = False
                break
        if ok:
            out.append(g)
    return out


@dataclass
class FilterReport:
    name: str
    mu: int
    use_satellites: bool
    stage_counts: list[tuple[str, int]]
    survivors: tuple[WhittenElement, ...]
    sigma_prime: Subgroup
    closed: bool
    ambiguous_maximal: bool = False
    retained_on_limit: int = 0
    matches_paper: str | None = None

    def to_json(self):
        return {
            "link": self.name,
            "mu": self.mu,
            "use_satellites": self.use_satellites,
            "stage_counts": self.stage_counts,
            "closed": self.closed,
            "ambiguous_maximal": self.ambiguous_maximal,
            "retained_on_limit": self.retained_on_limit,
            "sigma_prime": self.sigma_prime.to_json(),
            "order": self.sigma_prime.order,
            "coset_index": coset_index(self.sigma_prime),
            "matches_paper": self.matches_paper,
        }


def _largest_subgroups_within(mu: int, elements) -> tuple[list[Subgroup], bool]:
    """Maximal-order subgroups contained in the element set."""
    pool = set(elements)
    assert identity(mu) in pool
    best: list[frozenset] = []
    seen: set[frozenset] = set()
    frontier = [frozenset([identity(mu)])]
    seen.update(frontier)
    all_subs = set(frontier)
    while frontier:
        nxt = []
        for hset in frontier:
            for x in pool - hset:
                grown = generate(mu, list(hset) + [x]).element_set()
                if grown <= pool and grown not in seen:
                    seen.add(grown)
                    all_subs.add(grown)
                    nxt.append(grown)
        frontier = nxt
    top = max(len(s) for s in all_subs)
    maximal = sorted((s for s in all_subs if len(s) == top),
                     key=lambda s: tuple(sorted(e.sort_key() for e in s)))
    return [Subgroup.from_elements(mu, s) for s in maximal], len(maximal) > 1


def sigma_prime(d: LinkDiagram, use_satellites: bool = False, alternating: bool = False,
                name: str = "?", jones_limit: int = JONES_LIMIT,
                homfly_limit: int = HOMFLY_LIMIT) -> FilterReport:
    """Elements not excluded by any implemented invariant, as a subgroup."""
    stage_counts = []
    cands = candidate_stage(d, alternating)
    stage_counts.append(("candidates", len(cands)))
    base = profile(d, alternating, jones_limit, homfly_limit)
    retained = 0
    survivors = []
    for g in cands:
        if g == identity(d.mu):
            survivors.append(g)
            continue
        try:
            pg = profile(apply_whitten(g, d), alternating, jones_limit, homfly_limit)
        except ResourceLimitError:
            retained += 1
            survivors.append(g)
            continue
        if pg.homfly is None or base.homfly is None:
            same = (pg.linking, pg.self_writhe, pg.jones, pg.fingerprints) == (
                base.linking, base.self_writhe, base.jones, base.fingerprints)
            retained += 1
        else:
            same = pg == base
        if same:
            survivors.append(g)
    stage_counts.append(("polynomials", len(survivors)))

    if use_satellites:
        cable_cache: dict = {}

        def cable_jones(dd: LinkDiagram, i: int):
            key = (dd.key(), i)
            if key not in cable_cache:
                c = simplify(cable2(dd, i, clasp=True))
                cable_cache[key] = jones(c, CABLE_JONES_LIMIT)
            return cable_cache[key]

        kept = []
        for g in survivors:
            if g == identity(d.mu):
                kept.append(g)
                continue
            gd = apply_whitten(g, d)
            ok = True
            for i in range(1, d.mu + 1):
                try:
                    if cable_jones(d, i) != cable_jones(gd, i):
                        ok = False
                        break
                except ResourceLimitError:
                    retained += 1
                    continue
            if ok:
                kept.append(g)
        survivors = kept
        stage_counts.append(("satellites", len(survivors)))

    sset = set(survivors)
    closed = all(compose(a, b) in sset for a in sset for b in sset) and all(
        inverse(a) in sset for a in sset
    )
    ambiguous = False
    if closed:
        sp = Subgroup.from_elements(d.mu, sset)
    else:
        maximal, ambiguous = _largest_subgroups_within(d.mu, sset)
        sp = maximal[0]
    return FilterReport(
        name=name,
        mu=d.mu,
        use_satellites=use_satellites,
        stage_counts=stage_counts,
        survivors=tuple(sorted(sset, key=WhittenElement.sort_key)),
        sigma_prime=sp,
        closed=closed,
        ambiguous_maximal=ambiguous,
        retained_on_limit=retained,
    )


def compare_to_truth(name: str, use_satellites: bool = True, census_path: str | None = None) -> FilterReport:
    """Run the filter on a census link and grade it against the stored group."""
    rec = census_by_name(census_path).get(name)
    if rec is None:
        from .census import CensusError

        raise CensusError(f"unknown link {name!r}")
    rep = sigma_prime(rec.diagram, use_satellites, rec.alternating, name)
    truth = rec.ground_truth()
    tset = truth.element_set()
    if not tset <= set(rep.survivors):
        rep.matches_paper = "not_containing"
    elif tset == rep.sigma_prime.element_set():
        rep.matches_paper = "equal"
    elif tset <= rep.sigma_prime.element_set():
        rep.matches_paper = f"proper_superset({rep.sigma_prime.order // truth.order})"
    else:
        rep.matches_paper = "not_containing"
    return rep


def count_link_types(crossings: int, mu: int, census_path: str | None = None) -> int:
    """Oriented-labeled type count: cosets of each stored group, summed."""
    total = 0
    hit = False
    for rec in census_by_name(census_path).values():
        if rec.crossings == crossings and rec.mu == mu:
            total += coset_index(rec.ground_truth())
            hit = True
    if not hit:
        raise ValueError(f"census has no ({crossings}, {mu}) links")
    return total
