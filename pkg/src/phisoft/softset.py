"""Pythagorean fuzzy parameterized soft sets.

A soft set here couples a universe of alternatives with a family of
parameters, where each parameter carries a PFN importance degree and each
(alternative, parameter) cell holds a PFN describing how well the
alternative satisfies the parameter.  Sets are immutable after `build`;
the combination operators return new sets.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import (
    DuplicateId,
    EmptyIntersection,
    InvalidPFN,
    MissingCell,
    NotPythagorean,
    OutOfRange,
    UniverseMismatch,
)
from .pfn import COMPARE_EPS, PFN

PFNLike = PFN | tuple


@dataclass(frozen=True, slots=True)
class PFParameter:
    """A named parameter together with its PFN importance degree."""

    name: str
    importance: PFN


@dataclass(frozen=True, slots=True, eq=False)
class PhiSoftSet:
    """Universe x PF-weighted parameters with one PFN per table cell.

    Construct through `build`, which validates everything; the dataclass
    itself stores already-checked data.  Use `equals` for the
    order-insensitive domain equality.
    """

    universe: tuple[str, ...]
    parameters: tuple[PFParameter, ...]
    cells: dict[tuple[str, str], PFN] = field(repr=False)

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.parameters)

    def parameter(self, name: str) -> PFParameter:
        for p in self.parameters:
            if p.name == name:
                return p
        raise KeyError(name)

    def cell(self, alternative: str, name: str) -> PFN:
        return self.cells[(alternative, name)]

    def row(self, alternative: str) -> tuple[PFN, ...]:
        """The alternative's cells in parameter order."""
        return tuple(self.cells[(alternative, p.name)] for p in self.parameters)


def _check_id(kind: str, value) -> str:
    if not isinstance(value, str) or not value:
        raise ValueError(f"{kind} must be a non-empty string, got {value!r}")
    if "," in value or "\n" in value or "\r" in value:
        raise ValueError(f"{kind} {value!r} may not contain commas or newlines")
    return value


def _coerce_pfn(value: PFNLike, what: str) -> PFN:
    if isinstance(value, PFN):
        return value
    try:
        m, n = value
        return PFN(m, n)
    except (OutOfRange, NotPythagorean, TypeError, ValueError) as exc:
        raise InvalidPFN(f"{what}: {exc}") from None


def build(
    universe: Iterable[str],
    parameters: Iterable[PFParameter | tuple],
    cells: Mapping[tuple[str, str], PFNLike],
) -> PhiSoftSet:
    """Validate and assemble a soft set.

    `parameters` entries may be PFParameter objects or (name, importance)
    pairs, and cell values may be PFNs or (m, n) pairs.  The cell mapping
    must be total: exactly one entry per (alternative, parameter name).

    Raises DuplicateId, MissingCell, or InvalidPFN (with the offending
    coordinates in the message).
    """
    alts = tuple(_check_id("alternative id", a) for a in universe)
    if len(set(alts)) != len(alts):
        dupes = sorted({a for a in alts if alts.count(a) > 1})
        raise DuplicateId(f"duplicate alternative ids: {', '.join(dupes)}")

    params = []
    for entry in parameters:
        if isinstance(entry, PFParameter):
            name, importance = entry.name, entry.importance
        else:
            name, importance = entry
        params.append(
            PFParameter(name, _coerce_pfn(importance, f"importance of {name!r}"))
        )
    names = tuple(_check_id("parameter name", p.name) for p in params)
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise DuplicateId(f"duplicate parameter names: {', '.join(dupes)}")

    table: dict[tuple[str, str], PFN] = {}
    for alt in alts:
        for name in names:
            key = (alt, name)
            if key not in cells:
                raise MissingCell(f"missing cell ({alt}, {name})")
            table[key] = _coerce_pfn(cells[key], f"cell ({alt}, {name})")
    if len(cells) != len(table):
        extras = sorted(set(cells) - set(table))
        raise MissingCell(f"unexpected cells outside the table: {extras[:5]}")

    return PhiSoftSet(alts, tuple(params), table)


def _lattice_leq(a: PFN, b: PFN) -> bool:
    return a.m <= b.m and a.n >= b.n


def is_subset(a: PhiSoftSet, b: PhiSoftSet) -> bool:
    """Whether `a` is a soft subset of `b`.

    Requires equal universes (as sets), every parameter of `a` present in
    `b` with a lattice-dominating importance, and every cell of `a`
    lattice-dominated by the matching cell of `b`.
    """
    if set(a.universe) != set(b.universe):
        return False
    b_params = {p.name: p for p in b.parameters}
    for p in a.parameters:
        other = b_params.get(p.name)
        if other is None or not _lattice_leq(p.importance, other.importance):
            return False
        for alt in a.universe:
            if not _lattice_leq(a.cells[(alt, p.name)], b.cells[(alt, p.name)]):
                return False
    return True


def _pfn_close(a: PFN, b: PFN) -> bool:
    return abs(a.m - b.m) <= COMPARE_EPS and abs(a.n - b.n) <= COMPARE_EPS


def equals(a: PhiSoftSet, b: PhiSoftSet) -> bool:
    """Order-insensitive equality of universes, importances, and cells.

    Components are compared within COMPARE_EPS; callers needing bit
    equality should compare fields directly.
    """
    if set(a.universe) != set(b.universe):
        return False
    b_params = {p.name: p for p in b.parameters}
    if {p.name for p in a.parameters} != set(b_params):
        return False
    for p in a.parameters:
        if not _pfn_close(p.importance, b_params[p.name].importance):
            return False
        for alt in a.universe:
            if not _pfn_close(a.cells[(alt, p.name)], b.cells[(alt, p.name)]):
                return False
    return True


def _merged_importance(pa: PFParameter, pb: PFParameter, union: bool) -> PFN:
    ia, ib = pa.importance, pb.importance
    if union:
        return PFN(max(ia.m, ib.m), min(ia.n, ib.n))
    return PFN(min(ia.m, ib.m), max(ia.n, ib.n))


def _combine(a: PhiSoftSet, b: PhiSoftSet, union: bool, extended: bool) -> PhiSoftSet:
    if set(a.universe) != set(b.universe):
        raise UniverseMismatch(
            f"universes differ: {sorted(a.universe)} vs {sorted(b.universe)}"
        )
    a_names = set(a.parameter_names)
    b_params = {p.name: p for p in b.parameters}

    params: list[PFParameter] = []
    cells: dict[tuple[str, str], PFN] = {}
    for p in a.parameters:
        other = b_params.get(p.name)
        if other is not None:
            params.append(PFParameter(p.name, _merged_importance(p, other, union)))
            for alt in a.universe:
                x, y = a.cells[(alt, p.name)], b.cells[(alt, p.name)]
                if union:
                    cells[(alt, p.name)] = PFN(max(x.m, y.m), min(x.n, y.n))
                else:
                    cells[(alt, p.name)] = PFN(min(x.m, y.m), max(x.n, y.n))
        elif extended:
            params.append(p)
            for alt in a.universe:
                cells[(alt, p.name)] = a.cells[(alt, p.name)]
    if extended:
        for p in b.parameters:
            if p.name not in a_names:
                params.append(p)
                for alt in a.universe:
                    cells[(alt, p.name)] = b.cells[(alt, p.name)]
    elif not params:
        raise EmptyIntersection("the parameter sets share no name")

    return build(a.universe, params, cells)


def extended_union(a: PhiSoftSet, b: PhiSoftSet) -> PhiSoftSet:
    """Combine over the union of parameter sets, joining shared entries.

    Unshared parameters are copied; shared parameters take the
    componentwise (max m, min n) of both importances and of every cell.
    """
    return _combine(a, b, union=True, extended=True)


def extended_intersection(a: PhiSoftSet, b: PhiSoftSet) -> PhiSoftSet:
    """Combine over the union of parameter sets, meeting shared entries."""
    return _combine(a, b, union=False, extended=True)


def restricted_union(a: PhiSoftSet, b: PhiSoftSet) -> PhiSoftSet:
    """Join shared parameters only; raises EmptyIntersection if none."""
    return _combine(a, b, union=True, extended=False)


def restricted_intersection(a: PhiSoftSet, b: PhiSoftSet) -> PhiSoftSet:
    """Meet shared parameters only; raises EmptyIntersection if none."""
    return _combine(a, b, union=False, extended=False)


def constant_set(
    universe: Iterable[str],
    names: Iterable[str],
    a: float,
    b: float,
    importances: Mapping[str, PFNLike] | None = None,
) -> PhiSoftSet:
    """A set whose every cell equals (a, b).

    Importances default to (a, b) as well unless `importances` overrides
    them per parameter name.
    """
    value = PFN(a, b)
    universe = tuple(universe)
    names = tuple(names)
    if importances is None:
        params = [PFParameter(nm, value) for nm in names]
    else:
        params = [
            PFParameter(nm, _coerce_pfn(importances[nm], f"importance of {nm!r}"))
            for nm in names
        ]
    cells = {(alt, nm): value for alt in universe for nm in names}
    return build(universe, params, cells)


def null_set(universe: Iterable[str], names: Iterable[str]) -> PhiSoftSet:
    """The relative null set: cells and importances all (0, 1)."""
    return constant_set(universe, names, 0.0, 1.0)


def whole_set(universe: Iterable[str], names: Iterable[str]) -> PhiSoftSet:
    """The relative whole set: cells and importances all (1, 0)."""
    return constant_set(universe, names, 1.0, 0.0)
