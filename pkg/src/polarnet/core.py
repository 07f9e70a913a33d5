"""Core domain types for three-channel semantic nets.

A semantic net is a directed labeled graph whose vertices and edges each
carry a triple of degrees.  Depending on the net mode the channels are read
as truth/indeterminacy/falsehood (FNSN) or positivity/neutrality/negativity
(PNSN, PFNSN).  Each channel entry is either a determinate degree bounded
by the net's per-channel scale, or a scaled indeterminacy n*I with
coefficient n in (0, 1].

Nets are built single-writer through ``add_vertex``/``add_edge``; a finished
net is treated as immutable and is safe to share across threads for reads.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Iterator, NamedTuple, Union

__all__ = [
    "DEFAULT_SCALE",
    "NetError",
    "NetMode",
    "NeutroValue",
    "ChannelTriple",
    "Vertex",
    "Edge",
    "GraphClass",
    "Violation",
    "Order",
    "SemanticNet",
    "fmt_number",
    "is_valid_label",
]

#: Channel maxima implied by "complete" memberships in the example nets:
#: fully positive/true = 3.0, fully neutral = 2.0, fully negative/false = 1.0.
DEFAULT_SCALE = (3.0, 2.0, 1.0)

# Labels double as DSL identifiers and matrix row names, so they are
# restricted to identifier syntax (multi-word phrases use underscores).
_LABEL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class NetError(ValueError):
    """Raised when a construction step would break a net invariant."""


def is_valid_label(label: object) -> bool:
    """True when ``label`` can name a vertex (identifier syntax)."""
    return isinstance(label, str) and bool(_LABEL_RE.match(label))


class NetMode(Enum):
    """How the three channels of a net are interpreted."""

    FNSN = "FNSN"   # fuzzy neutrosophic: (t, i, f), degrees anywhere in range
    PNSN = "PNSN"   # polar neutrosophic: (p, u, n), degrees crisp (0 or max)
    PFNSN = "PFNSN"  # polar fuzzy neutrosophic: (p, u, n), degrees in range

    @property
    def channel_names(self) -> tuple[str, str, str]:
        if self is NetMode.FNSN:
            return ("t", "i", "f")
        return ("p", "u", "n")


def fmt_number(x: float) -> str:
    """Format a degree with minimal digits; exact under float round-trip."""
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


@dataclass(frozen=True)
class NeutroValue:
    """One channel entry: a determinate degree, or an indeterminacy n*I."""

    magnitude: float
    indeterminate: bool = False

    def __post_init__(self) -> None:
        m = float(self.magnitude)
        object.__setattr__(self, "magnitude", m)
        if self.indeterminate:
            if not 0.0 < m <= 1.0:
                raise NetError(
                    f"indeterminacy coefficient {m!r} outside (0, 1]")
        elif not m >= 0.0:  # also rejects NaN
            raise NetError(f"determinate degree {m!r} is not a nonnegative real")

    @classmethod
    def determinate(cls, value: float) -> "NeutroValue":
        return cls(float(value))

    @classmethod
    def indeterminacy(cls, coefficient: float = 1.0) -> "NeutroValue":
        """A scaled indeterminacy; bare I is coefficient 1.0."""
        return cls(float(coefficient), indeterminate=True)

    @property
    def is_zero(self) -> bool:
        return not self.indeterminate and self.magnitude == 0.0

    def __str__(self) -> str:
        if self.indeterminate:
            if self.magnitude == 1.0:
                return "I"
            return fmt_number(self.magnitude) + "I"
        return fmt_number(self.magnitude)


ValueLike = Union[NeutroValue, float, int]


def _coerce(value: ValueLike) -> NeutroValue:
    if isinstance(value, NeutroValue):
        return value
    return NeutroValue.determinate(value)


@dataclass(frozen=True)
class ChannelTriple:
    """Three channel entries, read as (t, i, f) or (p, u, n) by net mode."""

    c1: NeutroValue
    c2: NeutroValue
    c3: NeutroValue

    @classmethod
    def of(cls, c1: ValueLike, c2: ValueLike, c3: ValueLike) -> "ChannelTriple":
        """Build a triple, coercing plain numbers to determinate entries."""
        return cls(_coerce(c1), _coerce(c2), _coerce(c3))

    @classmethod
    def zero(cls) -> "ChannelTriple":
        return cls.of(0.0, 0.0, 0.0)

    def __iter__(self) -> Iterator[NeutroValue]:
        yield self.c1
        yield self.c2
        yield self.c3

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero for v in self)

    @property
    def has_indeterminate(self) -> bool:
        return any(v.indeterminate for v in self)

    def __str__(self) -> str:
        return "({}, {}, {})".format(*(str(v) for v in self))


TripleLike = Union[ChannelTriple, tuple]


def _coerce_triple(triple: TripleLike) -> ChannelTriple:
    if isinstance(triple, ChannelTriple):
        return triple
    if len(triple) != 3:
        raise NetError(f"channel triple needs 3 entries, got {len(triple)}")
    return ChannelTriple.of(*triple)


@dataclass(frozen=True)
class Vertex:
    """A labeled node; ``indeterminate`` marks an N_k node."""

    id: int
    label: str
    membership: ChannelTriple
    indeterminate: bool = False


@dataclass(frozen=True)
class Edge:
    """A directed relation between two vertices, src -> dst."""

    src: int
    dst: int
    weight: ChannelTriple
    label: str = ""
    indeterminate: bool = False


@dataclass(frozen=True)
class GraphClass:
    """Graph-theoretic classification flags of a net."""

    has_indeterminate_vertex: bool
    has_indeterminate_edge: bool
    is_point_graph: bool
    is_edge_graph: bool
    is_strongly_neutrosophic: bool
    is_neutrosophic_simple: bool

    def flags(self) -> dict[str, bool]:
        """Flags as an ordered name -> value mapping."""
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class Violation:
    """One well-formedness finding from ``SemanticNet.validate``."""

    message: str
    severity: str = "error"  # "error" | "warning"

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


class Order(NamedTuple):
    """Vertex counts: ordinary, indeterminate, and their total."""

    ordinary: int
    indeterminate: int
    total: int


@dataclass
class SemanticNet:
    """A mode-tagged directed net of vertices and weighted edges.

    ``scale`` holds the per-channel maxima for determinate degrees.  Vertex
    insertion order is significant: it defines matrix row/column order.
    """

    mode: NetMode
    name: str = ""
    scale: tuple[float, float, float] = DEFAULT_SCALE
    directed: bool = True
    vertices: list[Vertex] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)

    def __post_init__(self) -> None:
        scale = tuple(float(s) for s in self.scale)
        if len(scale) != 3:
            raise NetError(f"scale needs 3 components, got {len(scale)}")
        for k, s in enumerate(scale, start=1):
            if not s > 0.0:
                raise NetError(
                    f"channel {k} scale must be positive, got {fmt_number(s)}")
        self.scale = scale

    # -- construction -----------------------------------------------------

    def add_vertex(self, label: str, membership: TripleLike,
                   indeterminate: bool = False) -> int:
        """Append a vertex and return its id (the insertion index)."""
        self._check_label(label)
        if self.find_vertex(label) is not None:
            raise NetError(f"duplicate vertex label {label!r}")
        triple = _coerce_triple(membership)
        self._check_range(f"vertex {label!r}", triple)
        vid = len(self.vertices)
        self.vertices.append(Vertex(vid, label, triple, bool(indeterminate)))
        return vid

    def add_edge(self, src: int, dst: int, weight: TripleLike, label: str = "",
                 indeterminate: bool = False) -> Edge:
        """Append a directed edge src -> dst and return it."""
        self.vertex(src)
        self.vertex(dst)
        if src == dst:
            raise NetError(f"loop on vertex {src} rejected")
        if any(e.src == src and e.dst == dst for e in self.edges):
            raise NetError(f"duplicate edge {src} -> {dst}")
        triple = _coerce_triple(weight)
        self._check_range(f"edge {src} -> {dst}", triple)
        edge = Edge(src, dst, triple, label, bool(indeterminate))
        self.edges.append(edge)
        return edge

    # -- lookup -----------------------------------------------------------

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise NetError(f"unknown vertex id {vid}")

    def find_vertex(self, label: str) -> Vertex | None:
        for v in self.vertices:
            if v.label == label:
                return v
        return None

    def out_edges(self, vid: int) -> list[Edge]:
        return [e for e in self.edges if e.src == vid]

    # -- inspection -------------------------------------------------------

    def validate(self) -> list[Violation]:
        """Return all well-formedness violations for this net's mode.

        Constructed nets only ever accrue mode-semantic findings here
        (PNSN crispness) plus warnings for all-zero-weight edges, which are
        representable but unrecoverable from the adjacency tensor.
        Structural invariants are re-checked so that nets assembled from
        untrusted sources are covered too.
        """
        out: list[Violation] = []
        for k, s in enumerate(self.scale, start=1):
            if not s > 0.0:
                out.append(Violation(f"channel {k} scale is not positive"))
        seen_labels: set[str] = set()
        seen_ids: set[int] = set()
        for v in self.vertices:
            if not is_valid_label(v.label):
                out.append(Violation(
                    f"vertex label {v.label!r} is not an identifier"))
            if v.label in seen_labels:
                out.append(Violation(f"duplicate vertex label {v.label!r}"))
            seen_labels.add(v.label)
            if v.id in seen_ids:
                out.append(Violation(f"duplicate vertex id {v.id}"))
            seen_ids.add(v.id)
            out.extend(self._entry_violations(f"vertex {v.label!r}", v.membership))
        seen_pairs: set[tuple[int, int]] = set()
        for e in self.edges:
            where = f"edge {e.src} -> {e.dst}"
            if e.src not in seen_ids or e.dst not in seen_ids:
                out.append(Violation(f"{where} references a missing vertex"))
                continue
            if e.src == e.dst:
                out.append(Violation(f"{where} is a loop"))
            if (e.src, e.dst) in seen_pairs:
                out.append(Violation(f"duplicate {where}"))
            seen_pairs.add((e.src, e.dst))
            out.extend(self._entry_violations(where, e.weight))
            if e.weight.is_zero:
                out.append(Violation(
                    f"{where} has an all-zero weight and cannot be "
                    "reconstructed from the adjacency tensor",
                    severity="warning"))
        return out

    def classify(self) -> GraphClass:
        """Classification flags; a pure function of the indeterminate marks."""
        has_iv = any(v.indeterminate for v in self.vertices)
        has_ie = any(e.indeterminate for e in self.edges)
        ind_ids = {v.id for v in self.vertices if v.indeterminate}
        pair_counts: dict[tuple[int, int], int] = {}
        for e in self.edges:
            pair_counts[(e.src, e.dst)] = pair_counts.get((e.src, e.dst), 0) + 1
        simple = True
        for e in self.edges:
            touches = e.src in ind_ids or e.dst in ind_ids
            if e.src == e.dst and e.src in ind_ids:
                simple = False
            if pair_counts[(e.src, e.dst)] > 1 and touches:
                simple = False
        return GraphClass(
            has_indeterminate_vertex=has_iv,
            has_indeterminate_edge=has_ie,
            is_point_graph=has_iv,
            is_edge_graph=has_ie,
            is_strongly_neutrosophic=has_iv and has_ie,
            is_neutrosophic_simple=simple,
        )

    def order(self) -> Order:
        """Counts of ordinary and indeterminate vertices."""
        ind = sum(1 for v in self.vertices if v.indeterminate)
        total = len(self.vertices)
        return Order(total - ind, ind, total)

    # -- internals ----------------------------------------------------------

    def _check_label(self, label: str) -> None:
        if not is_valid_label(label):
            raise NetError(
                f"label {label!r} must be an identifier "
                "(letters, digits, underscore; not starting with a digit)")

    def _check_range(self, what: str, triple: ChannelTriple) -> None:
        for k, (val, mx) in enumerate(zip(triple, self.scale), start=1):
            if not val.indeterminate and val.magnitude > mx:
                raise NetError(
                    f"{what}: channel {k} degree {fmt_number(val.magnitude)} "
                    f"exceeds scale {fmt_number(mx)}")

    def _entry_violations(self, what: str, triple: ChannelTriple) -> list[Violation]:
        out: list[Violation] = []
        for k, (val, mx) in enumerate(zip(triple, self.scale), start=1):
            if val.indeterminate:
                if not 0.0 < val.magnitude <= 1.0:
                    out.append(Violation(
                        f"{what}: channel {k} indeterminacy coefficient "
                        f"{val.magnitude!r} outside (0, 1]"))
            elif not val.magnitude >= 0.0:
                out.append(Violation(
                    f"{what}: channel {k} degree is not a nonnegative real"))
            elif val.magnitude > mx:
                out.append(Violation(
                    f"{what}: channel {k} degree {fmt_number(val.magnitude)} "
                    f"exceeds scale {fmt_number(mx)}"))
            elif self.mode is NetMode.PNSN and val.magnitude not in (0.0, mx):
                out.append(Violation(
                    f"{what}: non-crisp degree {fmt_number(val.magnitude)} on "
                    f"channel {k} (PNSN requires 0 or {fmt_number(mx)})"))
        return out
