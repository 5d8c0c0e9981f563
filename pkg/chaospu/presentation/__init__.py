# -*- coding: utf-8 -*-
"""
H*(PU(n)) as a presented ring, its per-degree groups and their primary
decomposition.
"""
from chaospu.intlinalg import AbelianGroup
from chaospu.presentation.groups import groups_by_degree
from chaospu.presentation.relations import RingPresentation, present

__all__ = ["AbelianGroup", "RingPresentation", "present", "groups_by_degree"]
