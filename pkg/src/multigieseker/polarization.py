"""Polarizations (per-component degrees of L_1..L_k) and stability parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from .curve import DualGraph
from .errors import AllZero, ComponentMismatch, InvalidInput, NonPositiveDegree
from .rational import RationalLike, format_fraction, to_fraction


@dataclass(frozen=True)
class Polarization:
    """Row ``i`` holds ``deg_{C_j} L_i`` for every component ``C_j``.

    Degrees are positive rationals (ample Q-line bundles); integrality is not
    required.
    """

    degrees: tuple[Mapping[str, Fraction], ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        rows = tuple({str(c): to_fraction(v) for c, v in row.items()} for row in self.degrees)
        object.__setattr__(self, "degrees", rows)
        if not rows:
            raise InvalidInput("a polarization needs at least one line bundle")
        names = tuple(self.names) or tuple(f"L{i + 1}" for i in range(len(rows)))
        if len(names) != len(rows):
            raise InvalidInput("one name per line bundle")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_rows(cls, graph: DualGraph, rows: Sequence[Sequence[RationalLike]]) -> "Polarization":
        """Rows listed in the graph's component order."""
        for row in rows:
            if len(row) != len(graph.components):
                raise ComponentMismatch(
                    f"expected {len(graph.components)} degrees per row, got {len(row)}"
                )
        P = cls(tuple(dict(zip(graph.component_ids, row)) for row in rows))
        validate_polarization(graph, P)
        return P

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, Any]]) -> "Polarization":
        rows, names = [], []
        try:
            for i, entry in enumerate(data):
                names.append(str(entry.get("name", f"L{i + 1}")))
                rows.append(dict(entry["degrees"]))
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidInput(f"malformed polarization description: {exc}") from exc
        return cls(tuple(rows), tuple(names))

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"name": n, "degrees": {c: format_fraction(v) for c, v in sorted(row.items())}}
            for n, row in zip(self.names, self.degrees)
        ]

    @property
    def k(self) -> int:
        return len(self.degrees)

    def totals(self) -> tuple[Fraction, ...]:
        """``a_i = deg L_i`` on the whole curve."""
        return tuple(sum(row.values(), Fraction(0)) for row in self.degrees)

    def on(self, members: Iterable[str]) -> tuple[Fraction, ...]:
        """``deg_D L_i`` for each i, D given by its component ids."""
        members = list(members)
        return tuple(sum((row[c] for c in members), Fraction(0)) for row in self.degrees)

    def weighted(self, multirank: Mapping[str, int]) -> tuple[Fraction, ...]:
        """``b_i = sum_j r_j deg_{C_j} L_i``."""
        return tuple(
            sum((r * row[c] for c, r in multirank.items()), Fraction(0)) for row in self.degrees
        )

    def scaled(self, p: RationalLike) -> "Polarization":
        p = to_fraction(p)
        return Polarization(
            tuple({c: p * v for c, v in row.items()} for row in self.degrees), self.names
        )


def validate_polarization(graph: DualGraph, P: Polarization) -> None:
    ids = set(graph.component_ids)
    for name, row in zip(P.names, P.degrees):
        if set(row) != ids:
            missing = sorted(ids - set(row))
            extra = sorted(set(row) - ids)
            raise ComponentMismatch(
                f"{name}: degrees must be given on exactly the components "
                f"(missing {missing}, unknown {extra})"
            )
        for c, v in row.items():
            if v <= 0:
                raise NonPositiveDegree(f"{name} has degree {format_fraction(v)} on {c!r}")


@dataclass(frozen=True)
class StabilityParameter:
    """Nonnegative weights, not all zero.  Stored exactly as given."""

    sigma: tuple[Fraction, ...]

    def __post_init__(self):
        sigma = tuple(to_fraction(s) for s in self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if not sigma:
            raise InvalidInput("empty stability parameter")
        if any(s < 0 for s in sigma):
            raise InvalidInput("stability weights must be nonnegative")
        if not any(sigma):
            raise AllZero("stability weights are all zero")

    @classmethod
    def of(cls, *values: RationalLike) -> "StabilityParameter":
        return cls(tuple(values))

    def __len__(self):
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    @property
    def is_degenerate(self) -> bool:
        return any(s == 0 for s in self.sigma)

    def scaled(self, lam: RationalLike) -> "StabilityParameter":
        return StabilityParameter(tuple(to_fraction(lam) * s for s in self.sigma))


def as_parameter(sigma) -> StabilityParameter:
    if isinstance(sigma, StabilityParameter):
        return sigma
    return StabilityParameter(tuple(sigma))


def normalize(sigma) -> StabilityParameter:
    sigma = as_parameter(sigma)
    total = sum(sigma.sigma)
    return StabilityParameter(tuple(s / total for s in sigma.sigma))


def _check_length(P: Polarization, sigma: StabilityParameter) -> None:
    if len(sigma) != P.k:
        raise InvalidInput(f"sigma has {len(sigma)} entries but there are {P.k} line bundles")


def combined_degrees(P: Polarization, sigma) -> dict[str, Fraction]:
    """Per-component degree of the Q-line bundle ``L_1^{s_1} ... L_k^{s_k}``."""
    sigma = as_parameter(sigma)
    _check_length(P, sigma)
    out: dict[str, Fraction] = {}
    for s, row in zip(sigma.sigma, P.degrees):
        for c, v in row.items():
            out[c] = out.get(c, Fraction(0)) + s * v
    return out
