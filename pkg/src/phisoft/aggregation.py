"""Weighted averaging of PFNs and the per-alternative decision value.

Two weighted-averaging operators are provided: a componentwise arithmetic
mean and the geometric form that folds the Pythagorean sum over scalar
multiples.  Parameter weights are normalized expectation scores of the
importance degrees.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

from .errors import DegenerateWeights, LengthMismatch, UnknownAlternative
from .pfn import PFN, add_p, expectation_score, scalar_mul
from .softset import PFParameter, PhiSoftSet

#: Allowed deviation of a weight vector's sum from 1.
WEIGHT_SUM_EPS = 1e-9


@dataclass(frozen=True, slots=True)
class WeightVector:
    """Non-negative weights summing to 1 (within WEIGHT_SUM_EPS)."""

    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("weight vector may not be empty")
        for v in values:
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"weights must lie in [0, 1], got {v}")
        total = math.fsum(values)
        if abs(total - 1.0) > WEIGHT_SUM_EPS:
            raise ValueError(f"weights must sum to 1, got {total}")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def weights_from_importances(parameters: Sequence[PFParameter]) -> WeightVector:
    """Normalize the expectation scores of the importances into weights.

    Raises DegenerateWeights when every expectation score is 0 (which
    includes the empty parameter list): there is nothing to normalize.
    """
    scores = [expectation_score(p.importance) for p in parameters]
    total = math.fsum(scores)
    if total <= 0.0:
        raise DegenerateWeights(
            "all parameter importances have expectation score 0"
        )
    return WeightVector(tuple(s / total for s in scores))


def _check_lengths(values: Sequence[PFN], weights: WeightVector) -> None:
    if len(values) != len(weights):
        raise LengthMismatch(
            f"{len(values)} values vs {len(weights)} weights"
        )
    if not values:
        raise LengthMismatch("need at least one value")


def pfwa_linear(values: Sequence[PFN], weights: WeightVector) -> PFN:
    """Componentwise weighted arithmetic mean of the values.

    Convexity of the unit quarter disk keeps the result valid.
    """
    _check_lengths(values, weights)
    m = math.fsum(w * v.m for v, w in zip(values, weights))
    n = math.fsum(w * v.n for v, w in zip(values, weights))
    return PFN(m, n)


def pfwa_geometric(values: Sequence[PFN], weights: WeightVector) -> PFN:
    """Weighted averaging in the Pythagorean algebra.

    Closed form (sqrt(1 - prod (1-m_i**2)**w_i), prod n_i**w_i); equal to
    folding add_p over the scalar multiples w_i * value_i.  Zero-weight
    entries contribute nothing; 0**w = 0 for w > 0, so any zero
    non-membership zeroes the product.
    """
    _check_lengths(values, weights)

    m_saturated = False
    m_logs = []
    n_zero = False
    n_logs = []
    for v, w in zip(values, weights):
        if w == 0.0:
            continue
        s = min(v.m * v.m, 1.0)
        if s == 1.0:
            m_saturated = True
        else:
            m_logs.append(w * math.log1p(-s))
        if v.n == 0.0:
            n_zero = True
        else:
            n_logs.append(w * math.log(v.n))

    # fsum makes both components exact sums of their terms, so permuting
    # the (value, weight) pairs cannot change the result.
    m = 1.0 if m_saturated else math.sqrt(-math.expm1(math.fsum(m_logs)))
    n = 0.0 if n_zero else math.exp(math.fsum(n_logs))
    return PFN(m, n)


def pfwa_fold(values: Sequence[PFN], weights: WeightVector) -> PFN:
    """Left fold of add_p over scalar multiples; the constructive route.

    Kept as an independent path for cross-checking pfwa_geometric.  All
    weights must be positive (scalar_mul rejects 0).
    """
    _check_lengths(values, weights)
    return reduce(add_p, (scalar_mul(w, v) for v, w in zip(values, weights)))


def apfdv(softset: PhiSoftSet, alternative: str) -> PFN:
    """Aggregated decision value of one alternative.

    The geometric weighted average of the alternative's row under the
    expectation-score weights of the set's importances.
    """
    if alternative not in softset.universe:
        raise UnknownAlternative(f"{alternative!r} is not in the universe")
    weights = weights_from_importances(softset.parameters)
    return pfwa_geometric(softset.row(alternative), weights)
