"""
Canonical decomposition of a gene's Kisin variety

Each fragment contributes n constant points {[0:1]} followed by the variety
of its reduced fragment, n being the collapsed prefix length. Components are
the column slices carrying these factors, in gene order starting from the
first O.
"""

import logging
import math
from dataclasses import dataclass
from typing import Hashable, List, Optional, Tuple

from src.genes import Fragment, Gene, Letter, fragments, validate_fragment
from src.weights import fragment_count

from .presentation import KisinPresentation, presentation_of_fragment
from .reduction import ReducedCase, ReductionResult, reduce


logger = logging.getLogger(__name__)

_POINT = validate_fragment([(Letter.O, Letter.A)])


@dataclass(frozen=True)
class Component:
    columns: Tuple[int, ...]
    presentation: KisinPresentation
    count: int
    reduction: Optional[ReductionResult] = None

    @property
    def is_point(self) -> bool:
        return self.reduction is None

    @property
    def key(self) -> Hashable:
        if self.reduction is None:
            return "point"
        return reduction_key(self.reduction)


def reduction_key(result: ReductionResult) -> Hashable:
    """
    What the weight count of a reduced fragment depends on: its presentation,
    the reduced case, whether a length 1 fragment holds AB and which row holds
    the closing AB. The last two stand in for the shape data: [O / A] and
    [O / AB] have the same equations, and so do [O AB / A B] and [O B / A AB]
    (3 and 2 weights).
    """
    red = result.reduced
    return (
        presentation_of_fragment(red),
        result.case.value,
        red.down(0) == Letter.AB,
        red.up(len(red) - 1) == Letter.AB,
    )


def _components_of_fragment(F: Fragment, f: int) -> List[Component]:
    result = reduce(F)
    start = F.anchor or 0
    point = presentation_of_fragment(_POINT)
    out = [
        Component(((start + j) % f,), point, 1)
        for j in range(result.n)
    ]
    tail = tuple((start + j) % f for j in range(result.n, len(F)))
    out.append(Component(
        tail,
        presentation_of_fragment(result.reduced),
        fragment_count(result.reduced),
        result,
    ))
    return out


def decompose(g: Gene) -> List[Component]:
    """
    Raises:
        DegenerateGene: if g has no O
        NotViable: if g has a column (O, O)
    """
    out: List[Component] = []
    for F in fragments(g):
        out.extend(_components_of_fragment(F, g.f))
    logger.debug("Gene %s splits into %d components", g, len(out))
    return out


def constant_columns(g: Gene) -> List[int]:
    """Columns whose projection is constant on the variety, sorted."""
    out = []
    for comp in decompose(g):
        if comp.is_point:
            out.extend(comp.columns)
        else:
            out.append(comp.columns[0])
            if comp.reduction is not None and comp.reduction.case == ReducedCase.A_B_PREFIX:
                out.append(comp.columns[1])
    return sorted(out)


def component_count(g: Gene) -> int:
    """Card W(X) as the product of the component counts."""
    return math.prod(c.count for c in decompose(g))
