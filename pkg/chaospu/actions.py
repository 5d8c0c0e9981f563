# -*- coding: utf-8 -*-
import os.path

from chaoslib.types import Configuration
from logzero import logger

from chaospu import get_setting
from chaospu.exceptions import InvalidInput
from chaospu.presentation.export import render, render_groups
from chaospu.presentation.groups import groups_by_degree
from chaospu.presentation.relations import minimal_relations, present

__all__ = ["export_presentation", "export_groups"]


def _write(path: str, content: str) -> str:
    path = os.path.expanduser(path)
    try:
        with open(path, "w") as f:
            f.write(content)
    except OSError as x:
        raise InvalidInput("cannot write '{p}': {x}".format(p=path, x=str(x)))
    return path


def export_presentation(n: int, path: str, format: str = None,
                        minimal: bool = True,
                        configuration: Configuration = None) -> str:
    """
    Write the presentation of H*(PU(n)) to `path` as text, JSON or a LaTeX
    table of the per-prime relation generators. With `minimal`, relations
    implied by earlier ones are left out. Returns the written path.
    """
    format = format or get_setting("format", configuration, "text")
    presentation = present(n)
    if minimal:
        presentation = minimal_relations(presentation)
    written = _write(path, render(presentation, format))
    logger.debug("Wrote the presentation of PU({n}) to '{p}'".format(
        n=n, p=written))
    return written


def export_groups(n: int, path: str, format: str = None,
                  max_degree: int = None,
                  configuration: Configuration = None) -> str:
    """
    Write the table of H^d(PU(n)), d = 0..max_degree, to `path`.
    """
    format = format or get_setting("format", configuration, "text")
    if max_degree is None:
        max_degree = get_setting("max_degree", configuration)
    jobs = int(get_setting("jobs", configuration, 1))
    groups = groups_by_degree(
        n, int(max_degree) if max_degree is not None else None, jobs=jobs)
    written = _write(path, render_groups(groups, format))
    logger.debug("Wrote {c} groups of PU({n}) to '{p}'".format(
        c=len(groups), n=n, p=written))
    return written
