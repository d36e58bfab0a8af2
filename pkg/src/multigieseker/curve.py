"""Dual graphs of nodal curves, subcurves, and rank-one torsion-free sheaves.

A nodal curve is recorded by its dual graph: one vertex per irreducible
component (weighted by geometric genus) and one edge per node.  Self-nodes and
multiple nodes between two components are allowed.  Node indices are the
positions in ``DualGraph.nodes`` (0-based in the library; the JSON/CLI layer
names them ``n1, n2, ...``).

A rank-one torsion-free sheaf is modelled as the pushforward of a line bundle
from the partial normalization at a node set ``S``; it is described by the
degrees of that line bundle on each component plus ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    Disconnected,
    DuplicateComponentId,
    InvalidInput,
    InvalidSheaf,
    NotProper,
    UnknownComponent,
    UnknownComponentInNode,
)


@dataclass(frozen=True)
class DualGraph:
    """Components ``(id, genus)`` and nodes ``(id, id)``; validated on construction.

    ``metadata`` (marking count, target label, curve class, ...) is carried
    along untouched and never read by any computation.
    """

    components: tuple[tuple[str, int], ...]
    nodes: tuple[tuple[str, str], ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple((str(c), g) for c, g in self.components)
        )
        object.__setattr__(self, "nodes", tuple((str(a), str(b)) for a, b in self.nodes))
        object.__setattr__(self, "metadata", dict(self.metadata))
        validate_graph(self)

    @property
    def component_ids(self) -> tuple[str, ...]:
        return tuple(c for c, _ in self.components)

    @property
    def genera(self) -> dict[str, int]:
        return dict(self.components)

    def index(self, component_id: str) -> int:
        try:
            return self.component_ids.index(component_id)
        except ValueError:
            raise UnknownComponent(f"unknown component {component_id!r}") from None

    @property
    def genus(self) -> int:
        return arithmetic_genus(self)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "DualGraph":
        try:
            comps = [(c["id"], c["genus"]) for c in data["components"]]
            nodes = [tuple(n) for n in data.get("nodes", [])]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed curve description: {exc}") from exc
        for n in nodes:
            if len(n) != 2:
                raise InvalidInput(f"a node joins exactly two branches, got {list(n)}")
        return cls(tuple(comps), tuple(nodes), data.get("metadata", {}))

    def to_json(self) -> dict[str, Any]:
        return {
            "components": [{"id": c, "genus": g} for c, g in self.components],
            "nodes": [list(n) for n in self.nodes],
            "metadata": dict(self.metadata),
        }


def validate_graph(graph: DualGraph) -> None:
    ids = [c for c, _ in graph.components]
    if not ids:
        raise InvalidInput("a curve needs at least one component")
    seen = set()
    for c in ids:
        if c in seen:
            raise DuplicateComponentId(f"component id {c!r} occurs twice")
        seen.add(c)
    for c, g in graph.components:
        if isinstance(g, bool) or not isinstance(g, int) or g < 0:
            raise InvalidInput(f"genus of {c!r} must be a nonnegative integer, got {g!r}")
    for a, b in graph.nodes:
        for end in (a, b):
            if end not in seen:
                raise UnknownComponentInNode(f"node ({a}, {b}) references unknown component {end!r}")
    if not _is_connected(set(ids), graph.nodes):
        raise Disconnected("the dual graph is not connected")
    if arithmetic_genus(graph) < 0:  # unreachable for connected graphs, kept as a guard
        raise InvalidInput("negative arithmetic genus")


def _is_connected(vertices: set[str], nodes: Iterable[tuple[str, str]]) -> bool:
    if not vertices:
        return False
    adj: dict[str, set[str]] = {v: set() for v in vertices}
    for a, b in nodes:
        if a in vertices and b in vertices:
            adj[a].add(b)
            adj[b].add(a)
    start = next(iter(vertices))
    stack, reached = [start], {start}
    while stack:
        v = stack.pop()
        for w in adj[v] - reached:
            reached.add(w)
            stack.append(w)
    return reached == vertices


def arithmetic_genus(graph: DualGraph) -> int:
    return (
        sum(g for _, g in graph.components)
        + len(graph.nodes)
        - len(graph.components)
        + 1
    )


@dataclass(frozen=True)
class Subcurve:
    component_ids: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "component_ids", frozenset(self.component_ids))
        if not self.component_ids:
            raise NotProper("a subcurve must be nonempty")

    def complement(self, graph: DualGraph) -> "Subcurve":
        check_subcurve(graph, self)
        return Subcurve(frozenset(graph.component_ids) - self.component_ids)

    def sort_key(self) -> tuple[int, tuple[str, ...]]:
        return (len(self.component_ids), tuple(sorted(self.component_ids)))

    def __str__(self):
        return "{" + ",".join(sorted(self.component_ids)) + "}"


def check_subcurve(graph: DualGraph, D: Subcurve) -> None:
    ids = set(graph.component_ids)
    for c in D.component_ids:
        if c not in ids:
            raise UnknownComponent(f"unknown component {c!r}")
    if D.component_ids == ids:
        raise NotProper("a subcurve must not be the whole curve")


def connected_proper_subcurves(graph: DualGraph) -> list[Subcurve]:
    """All nonempty proper component subsets inducing a connected subgraph.

    Ordered by size, then by the sorted tuple of component ids.  Exhaustive
    subset enumeration; intended for at most ~16 components.
    """
    ids = graph.component_ids
    out = []
    for size in range(1, len(ids)):
        for subset in combinations(ids, size):
            if _is_connected(set(subset), graph.nodes):
                out.append(Subcurve(frozenset(subset)))
    out.sort(key=Subcurve.sort_key)
    return out


def proper_subcurves(graph: DualGraph) -> list[Subcurve]:
    """Every nonempty proper subset, connected or not."""
    ids = graph.component_ids
    out = [
        Subcurve(frozenset(s))
        for size in range(1, len(ids))
        for s in combinations(ids, size)
    ]
    out.sort(key=Subcurve.sort_key)
    return out


class SubcurveInvariants(NamedTuple):
    k_D: int
    genus_D: int
    deg_omega_D: int
    chi_O_D: int


def _node_split(graph: DualGraph, members: frozenset[str]) -> tuple[int, int]:
    internal = joining = 0
    for a, b in graph.nodes:
        inside = (a in members) + (b in members)
        if inside == 2:
            internal += 1
        elif inside == 1:
            joining += 1
    return internal, joining


def subcurve_invariants(graph: DualGraph, D: Subcurve) -> SubcurveInvariants:
    """``k_D``, arithmetic genus, ``deg(omega_C|_D)`` and ``chi(O_D)``.

    ``genus_D = 1 - chi_O_D`` is the arithmetic genus only when D is connected.
    ``deg_omega_D`` is integral but returned as ``int``; it is half-integral
    only after dividing by two in the stability inequality.
    """
    check_subcurve(graph, D)
    internal, k_D = _node_split(graph, D.component_ids)
    genera = graph.genera
    chi = sum(1 - genera[c] for c in D.component_ids) - internal
    genus_D = 1 - chi
    return SubcurveInvariants(k_D, genus_D, 2 * genus_D - 2 + k_D, chi)


def deg_omega_components(graph: DualGraph) -> dict[str, int]:
    """Degree of the dualizing sheaf on each component: ``2 g_j - 2`` plus one per branch."""
    out = {c: 2 * g - 2 for c, g in graph.components}
    for a, b in graph.nodes:
        out[a] += 1
        out[b] += 1
    return out


@dataclass(frozen=True)
class RankOneSheaf:
    """Pushforward of a line bundle from the partial normalization at ``not_locally_free``.

    ``tilde_multidegree`` maps each component id to the degree of the line
    bundle on the corresponding component of the partial normalization.
    """

    tilde_multidegree: Mapping[str, int]
    not_locally_free: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "tilde_multidegree", dict(self.tilde_multidegree))
        object.__setattr__(self, "not_locally_free", frozenset(self.not_locally_free))

    @classmethod
    def from_sequence(
        cls, graph: DualGraph, degrees: Sequence[int], not_locally_free: Iterable[int] = ()
    ) -> "RankOneSheaf":
        if len(degrees) != len(graph.components):
            raise InvalidSheaf(
                f"expected {len(graph.components)} degrees, got {len(degrees)}"
            )
        F = cls(dict(zip(graph.component_ids, degrees)), frozenset(not_locally_free))
        validate_sheaf(graph, F)
        return F

    def as_tuple(self, graph: DualGraph) -> tuple[int, ...]:
        return tuple(self.tilde_multidegree[c] for c in graph.component_ids)

    @property
    def delta(self) -> int:
        return len(self.not_locally_free)


def validate_sheaf(graph: DualGraph, F: RankOneSheaf) -> None:
    ids = set(graph.component_ids)
    for c, v in F.tilde_multidegree.items():
        if c not in ids:
            raise UnknownComponent(f"multidegree names unknown component {c!r}")
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidSheaf(f"degree on {c!r} must be an integer, got {v!r}")
    missing = ids - set(F.tilde_multidegree)
    if missing:
        raise InvalidSheaf(f"multidegree missing components {sorted(missing)}")
    for n in F.not_locally_free:
        if isinstance(n, bool) or not isinstance(n, int) or not 0 <= n < len(graph.nodes):
            raise InvalidSheaf(f"node index {n!r} out of range")


class ChiDeg(NamedTuple):
    chi: int
    deg: int


def sheaf_chi_deg(graph: DualGraph, F: RankOneSheaf) -> ChiDeg:
    validate_sheaf(graph, F)
    deg = sum(F.tilde_multidegree.values()) + F.delta
    return ChiDeg(deg + 1 - arithmetic_genus(graph), deg)


def deg_on_subcurve(graph: DualGraph, F: RankOneSheaf, D: Subcurve) -> int:
    """Degree of F restricted to D modulo torsion.

    Every non-locally-free node with both branches on D adds one; nodes of S
    joining D to its complement do not contribute.
    """
    check_subcurve(graph, D)
    validate_sheaf(graph, F)
    members = D.component_ids
    internal_s = sum(
        1
        for n in F.not_locally_free
        if graph.nodes[n][0] in members and graph.nodes[n][1] in members
    )
    return sum(F.tilde_multidegree[c] for c in members) + internal_s


def chi_on_subcurve(graph: DualGraph, F: RankOneSheaf, D: Subcurve) -> int:
    """``chi(F_D) = deg_D F + chi(O_D)``."""
    return deg_on_subcurve(graph, F, D) + subcurve_invariants(graph, D).chi_O_D


@dataclass(frozen=True)
class SheafClass:
    """Numerical class ``(rank, chi, multirank)`` of a torsion-free sheaf."""

    rank: int
    chi: int
    multirank: Mapping[str, int]

    def __post_init__(self):
        object.__setattr__(self, "multirank", dict(self.multirank))
        if self.rank < 1:
            raise InvalidInput("rank must be positive")
        for c, r in self.multirank.items():
            if not 0 <= r <= self.rank:
                raise InvalidInput(f"multirank on {c!r} must lie in [0, {self.rank}]")

    @classmethod
    def uniform(cls, graph: DualGraph, rank: int, degree: int) -> "SheafClass":
        return cls(
            rank,
            degree + rank * (1 - arithmetic_genus(graph)),
            {c: rank for c in graph.component_ids},
        )

    @classmethod
    def from_sequence(
        cls, graph: DualGraph, rank: int, chi: int, multirank: Sequence[int]
    ) -> "SheafClass":
        if len(multirank) != len(graph.components):
            raise InvalidInput(
                f"expected {len(graph.components)} multirank entries, got {len(multirank)}"
            )
        return cls(rank, chi, dict(zip(graph.component_ids, multirank)))

    def is_zero(self) -> bool:
        return not any(self.multirank.values())


def check_class(graph: DualGraph, cls_: SheafClass) -> None:
    ids = set(graph.component_ids)
    for c in cls_.multirank:
        if c not in ids:
            raise UnknownComponent(f"multirank names unknown component {c!r}")
    if set(cls_.multirank) != ids:
        raise InvalidInput("multirank must give a value on every component")
