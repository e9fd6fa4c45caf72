"""The five-step decision procedure over two expert soft sets.

Combine the two sets (extended intersection by default), aggregate each
alternative's row into a single decision value, then rank descendingly
under a configurable total order.  Rank 1 is the optimal alternative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cmp_to_key

from .aggregation import (
    WeightVector,
    pfwa_geometric,
    pfwa_linear,
    weights_from_importances,
)
from .pfn import PFN, OrderKind, Ordering, accuracy, compare, expectation_score, score
from .softset import (
    PhiSoftSet,
    extended_intersection,
    extended_union,
    restricted_intersection,
    restricted_union,
)


class CombineRule(Enum):
    EXTENDED_UNION = "eunion"
    EXTENDED_INTERSECTION = "eintersect"
    RESTRICTED_UNION = "runion"
    RESTRICTED_INTERSECTION = "rintersect"


class Aggregator(Enum):
    GEOMETRIC = "geometric"
    LINEAR = "linear"


_COMBINE = {
    CombineRule.EXTENDED_UNION: extended_union,
    CombineRule.EXTENDED_INTERSECTION: extended_intersection,
    CombineRule.RESTRICTED_UNION: restricted_union,
    CombineRule.RESTRICTED_INTERSECTION: restricted_intersection,
}


@dataclass(frozen=True, slots=True)
class DecisionConfig:
    """How to combine, aggregate, and rank.

    The default ranking order puts the expectation score first, which is
    the order the worked medical example's final ranking follows.
    """

    combine: CombineRule = CombineRule.EXTENDED_INTERSECTION
    aggregator: Aggregator = Aggregator.GEOMETRIC
    ranking_order: OrderKind = OrderKind.ES_THEN_MEMBERSHIP

    def __post_init__(self):
        if self.ranking_order is OrderKind.LATTICE:
            raise ValueError("ranking needs a total order, not the lattice order")


@dataclass(frozen=True, slots=True)
class AlternativeMeasures:
    """One report row: the aggregated value and its derived measures."""

    alternative: str
    apfdv: PFN
    es: float
    sf: float
    af: float
    rank: int


@dataclass(frozen=True, slots=True)
class DecisionReport:
    """Everything the procedure produced, in universe order.

    `combined` is the intermediate step-2 set so the combination can be
    audited; `rows` carry one rank per alternative, 1 = optimal.
    """

    rows: tuple[AlternativeMeasures, ...]
    weights: WeightVector
    combined: PhiSoftSet
    config: DecisionConfig = field(repr=False)

    def row(self, alternative: str) -> AlternativeMeasures:
        for r in self.rows:
            if r.alternative == alternative:
                return r
        raise KeyError(alternative)

    def ranking(self) -> tuple[str, ...]:
        """Alternative ids from rank 1 upward."""
        return tuple(r.alternative for r in sorted(self.rows, key=lambda r: r.rank))

    def optimal(self) -> str:
        return self.ranking()[0]


def _rank(softset: PhiSoftSet, config: DecisionConfig) -> DecisionReport:
    weights = weights_from_importances(softset.parameters)
    aggregate = (
        pfwa_geometric if config.aggregator is Aggregator.GEOMETRIC else pfwa_linear
    )
    values = {alt: aggregate(softset.row(alt), weights) for alt in softset.universe}

    def descending(x: str, y: str) -> int:
        verdict = compare(values[x], values[y], config.ranking_order)
        if verdict is Ordering.LESS:
            return 1
        if verdict is Ordering.GREATER:
            return -1
        # exact ties: larger membership first, then alternative id
        if values[x].m != values[y].m:
            return -1 if values[x].m > values[y].m else 1
        return -1 if x < y else (1 if x > y else 0)

    ordered = sorted(softset.universe, key=cmp_to_key(descending))
    ranks = {alt: i + 1 for i, alt in enumerate(ordered)}
    rows = tuple(
        AlternativeMeasures(
            alternative=alt,
            apfdv=values[alt],
            es=expectation_score(values[alt]),
            sf=score(values[alt]),
            af=accuracy(values[alt]),
            rank=ranks[alt],
        )
        for alt in softset.universe
    )
    return DecisionReport(rows=rows, weights=weights, combined=softset, config=config)


def decide(
    a: PhiSoftSet, b: PhiSoftSet, config: DecisionConfig | None = None
) -> DecisionReport:
    """Run the full procedure on two expert soft sets."""
    config = config or DecisionConfig()
    combined = _COMBINE[config.combine](a, b)
    return _rank(combined, config)


def decide_single(
    softset: PhiSoftSet, config: DecisionConfig | None = None
) -> DecisionReport:
    """Aggregate and rank one already-combined soft set (skips step 2)."""
    config = config or DecisionConfig()
    return _rank(softset, config)
