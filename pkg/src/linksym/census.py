"""The embedded census of prime links with up to eight crossings.

Records carry frozen PD codes plus a calibration (label permutation and
reversal signs) applied at load, so the in-memory diagrams match the
published component numbering and orientation conventions wherever those
are pinned by printed data; the rest agree up to conjugacy and say so in
their notes.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources

from .diagram import LinkDiagram, apply_whitten
from .linkmatrix import LinkingMatrix
from .whitten import Permutation, Subgroup, WhittenElement, generate

__all__ = ["LinkRecord", "CensusError", "load_census", "census_by_name", "ground_truth_sigma"]

SCHEMA_VERSION = 1


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class LinkRecord:
    rolfsen: str
    thistlethwaite: str
    mu: int
    crossings: int
    alternating: bool
    diagram: LinkDiagram
    sigma_generators: tuple[WhittenElement, ...]
    calibration: tuple[tuple[int, ...], tuple[int, ...]]
    linking_matrix_paper: LinkingMatrix | None = None
    notes: str = ""

    def ground_truth(self) -> Subgroup:
        return generate(self.mu, self.sigma_generators)


def _diagram_from_record(rec: dict) -> LinkDiagram:
    crossings = [tuple(c) for c in rec["pd"]]
    comp_of = {int(a): int(l) for a, l in rec.get("components", {}).items()}
    free = tuple(rec.get("free_loops", ()))
    over_in = rec.get("over_in")
    raw = LinkDiagram(crossings, comp_of or None, free, over_in)
    cal = rec.get("calibration") or {}
    perm = cal.get("perm")
    flips = cal.get("flips")
    mu = raw.mu
    if perm is None and flips is None:
        return raw
    p = Permutation(tuple(i - 1 for i in perm)) if perm else Permutation.identity(mu)
    eps = tuple(flips) if flips else (1,) * mu
    return apply_whitten(WhittenElement(1, eps, p), raw)


def _validate_record(rec: dict, d: LinkDiagram, errors: list[str]):
    name = rec["rolfsen"]
    if d.mu != rec["mu"]:
        errors.append(f"{name}: diagram has {d.mu} components, record says {rec['mu']}")
    if len(d.crossings) != rec["crossings"]:
        errors.append(
            f"{name}: diagram has {len(d.crossings)} crossings, record says {rec['crossings']}"
        )
    gens = tuple(WhittenElement.parse(g) for g in rec["sigma_generators"])
    sigma = generate(rec["mu"], gens)
    if "sigma_order" in rec and sigma.order != rec["sigma_order"]:
        errors.append(f"{name}: generated symmetry group has order {sigma.order},"
                      f" expected {rec['sigma_order']}")
    lm = rec.get("linking_matrix_paper")
    if lm is not None:
        if d.linking_matrix() != LinkingMatrix.from_rows(lm):
            errors.append(f"{name}: calibrated linking matrix {d.linking_matrix().entries}"
                          f" differs from published {lm}")
    from .linkmatrix import act_matrix

    A = d.linking_matrix()
    for g in sigma.elements:
        if act_matrix(g, A) != A:
            errors.append(f"{name}: stored symmetry {g} does not stabilize the linking matrix")
            break


def default_census_path() -> str:
    env = os.environ.get("WHITTEN_CENSUS")
    if env:
        return env
    return str(resources.files("linksym").joinpath("data/census.json"))


def load_census(path: str | None = None, validate: bool = True) -> list[LinkRecord]:
    """Load and validate all records; failures list every offender."""
    path = path or default_census_path()
    with open(path) as fh:
        data = json.load(fh)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise CensusError(f"unsupported census schema {data.get('schema_version')}")
    out = []
    errors: list[str] = []
    for rec in data["links"]:
        try:
            d = _diagram_from_record(rec)
        except Exception as exc:  # noqa: BLE001 - collect all failures
            errors.append(f"{rec.get('rolfsen', '?')}: {exc}")
            continue
        if validate:
            _validate_record(rec, d, errors)
        cal = rec.get("calibration") or {}
        out.append(
            LinkRecord(
                rolfsen=rec["rolfsen"],
                thistlethwaite=rec["thistlethwaite"],
                mu=rec["mu"],
                crossings=rec["crossings"],
                alternating=rec["alternating"],
                diagram=d,
                sigma_generators=tuple(WhittenElement.parse(g) for g in rec["sigma_generators"]),
                calibration=(tuple(cal.get("perm", ())), tuple(cal.get("flips", ()))),
                linking_matrix_paper=(
                    LinkingMatrix.from_rows(rec["linking_matrix_paper"])
                    if rec.get("linking_matrix_paper")
                    else None
                ),
                notes=rec.get("notes", ""),
            )
        )
    if errors:
        raise CensusError("census validation failed:\n  " + "\n  ".join(errors))
    return out


_CACHE: dict[str, dict[str, LinkRecord]] = {}


def census_by_name(path: str | None = None) -> dict[str, LinkRecord]:
    key = path or default_census_path()
    if key not in _CACHE:
        _CACHE[key] = {r.rolfsen: r for r in load_census(path)}
    return _CACHE[key]


def ground_truth_sigma(name: str, path: str | None = None) -> Subgroup:
    recs = census_by_name(path)
    if name not in recs:
        raise CensusError(f"unknown link {name!r}")
    return recs[name].ground_truth()
