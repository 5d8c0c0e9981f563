# -*- coding: utf-8 -*-
"""
Text, JSON and LaTeX renderings of presentations and group tables. All
renderings are deterministic; numbers that can grow are written as strings.
"""
import json
from typing import Any, Dict, List

from chaospu.exceptions import InvalidInput
from chaospu.graded import PresElement
from chaospu.intlinalg import AbelianGroup
from chaospu.multiindex import MultiIndex
from chaospu.presentation.relations import PrimaryComponent, Relation, \
    RingPresentation

__all__ = ["FORMATS", "presentation_to_json", "presentation_from_json",
           "presentation_to_text", "primary_to_latex", "presentation_to_latex",
           "groups_to_json", "groups_to_text", "groups_to_latex", "render",
           "render_groups"]

FORMATS = ("text", "json", "latex")


def _relation_to_json(relation: Relation) -> Dict[str, Any]:
    return {"provenance": relation.provenance,
            "terms": relation.value.to_json()}


def _primary_to_json(component: PrimaryComponent) -> Dict[str, Any]:
    return {"p": component.p, "r": component.r,
            "orders": [_relation_to_json(r) for r in component.orders],
            "relations": [_relation_to_json(r)
                          for r in component.relations]}


def presentation_to_json(presentation: RingPresentation) -> Dict[str, Any]:
    return {
        "n": presentation.n,
        "generators": [{"name": name, "deg": deg}
                       for name, deg in presentation.generators],
        "relations": [_relation_to_json(r) for r in presentation.relations],
        "primary": [_primary_to_json(c) for c in presentation.primary]
    }


def _relation_from_json(n: int, payload: Dict[str, Any]) -> Relation:
    provenance = payload["provenance"]
    index = None
    if provenance.startswith("I="):
        index = MultiIndex.parse(n, provenance[2:])
    return Relation(PresElement.from_json(n, payload["terms"]), provenance,
                    index)


def presentation_from_json(payload: Dict[str, Any]) -> RingPresentation:
    """
    Rebuild a presentation from `presentation_to_json` output.
    """
    try:
        n = int(payload["n"])
        generators = tuple((g["name"], int(g["deg"]))
                           for g in payload["generators"])
        relations = tuple(_relation_from_json(n, r)
                          for r in payload["relations"])
        primary = tuple(
            PrimaryComponent(
                int(c["p"]), int(c["r"]),
                tuple(_relation_from_json(n, r) for r in c["orders"]),
                tuple(_relation_from_json(n, r) for r in c["relations"]))
            for c in payload.get("primary", []))
    except (KeyError, TypeError, ValueError) as x:
        raise InvalidInput("malformed presentation: {x}".format(x=str(x)))
    return RingPresentation(n, generators, relations, primary)


def presentation_to_text(presentation: RingPresentation) -> str:
    lines = ["PU({n})".format(n=presentation.n),
             "generators: " + ", ".join(
                 "{g}({d})".format(g=name, d=deg)
                 for name, deg in presentation.generators),
             "relations:"]
    for relation in presentation.relations:
        lines.append("  {p}: {v}".format(p=relation.provenance,
                                         v=relation.value.to_text()))
    for component in presentation.primary:
        lines.append("primary p={p} r={r}:".format(p=component.p,
                                                   r=component.r))
        for relation in component.orders + component.relations:
            lines.append("  {p}: {v}".format(p=relation.provenance,
                                             v=relation.value.to_text()))
    return "\n".join(lines) + "\n"


def _latex_index(index: MultiIndex) -> str:
    return r"$\{%s\}$" % ",".join(str(i) for i in index)


def primary_to_latex(component: PrimaryComponent) -> str:
    """
    Two-column table of the relation generators, one row per index set.
    """
    lines = [r"\begin{tabular}{l|l}", r"\hline\hline",
             r"$I$ & $R_{I}$ \\ \hline\hline"]
    for relation in component.relations:
        lines.append(r"%s & $%s$ \\ \hline" % (
            _latex_index(relation.index), relation.value.to_latex()))
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def presentation_to_latex(presentation: RingPresentation) -> str:
    return "".join(primary_to_latex(c) for c in presentation.primary)


def groups_to_json(groups: Dict[int, AbelianGroup]) -> List[Dict[str, Any]]:
    rows = []
    for d, group in sorted(groups.items()):
        row = {"degree": d}
        row.update(group.to_json())
        rows.append(row)
    return rows


def groups_to_text(groups: Dict[int, AbelianGroup]) -> str:
    return "".join("{d}: {g}\n".format(d=d, g=str(group))
                   for d, group in sorted(groups.items()))


def groups_to_latex(groups: Dict[int, AbelianGroup]) -> str:
    lines = [r"\begin{tabular}{r|l}", r"\hline\hline",
             r"$d$ & $H^{d}$ \\ \hline\hline"]
    for d, group in sorted(groups.items()):
        parts = []
        if group.free_rank == 1:
            parts.append(r"\mathbb{Z}")
        elif group.free_rank > 1:
            parts.append(r"\mathbb{Z}^{%d}" % group.free_rank)
        parts.extend(r"\mathbb{Z}/%d" % t for t in group.torsion)
        lines.append(r"%d & $%s$ \\ \hline" % (
            d, r"\oplus ".join(parts) or "0"))
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _check_format(format: str):
    if format not in FORMATS:
        raise InvalidInput("format must be one of {f}, got '{g}'".format(
            f=", ".join(FORMATS), g=format))


def render(presentation: RingPresentation, format: str = "text") -> str:
    _check_format(format)
    if format == "json":
        return _dump(presentation_to_json(presentation))
    if format == "latex":
        return presentation_to_latex(presentation)
    return presentation_to_text(presentation)


def render_groups(groups: Dict[int, AbelianGroup],
                  format: str = "text") -> str:
    _check_format(format)
    if format == "json":
        return _dump(groups_to_json(groups))
    if format == "latex":
        return groups_to_latex(groups)
    return groups_to_text(groups)
