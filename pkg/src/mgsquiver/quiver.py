"""Ice quivers, mutation, framing and green/red vertex colors.

Quivers are immutable. Parallel arrows are stored as a single record with a
multiplicity, so the quiver is equivalent to its signed exchange matrix
``b(u, v) = mult(u -> v) - mult(v -> u)``.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence


class QuiverError(ValueError):
    """Base class for errors raised by quiver operations."""


class UnknownVertex(QuiverError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class MutationAtFrozen(QuiverError):
    pass


class FrozenQuery(QuiverError):
    pass


class AlreadyIced(QuiverError):
    pass


class InvalidQuiver(QuiverError):
    pass


class VertexColor(enum.Enum):
    GREEN = "green"
    RED = "red"
    # only seen on hand-built inputs; sign coherence rules it out on framed states
    MIXED = "mixed"


@dataclass(frozen=True)
class Vertex:
    id: int
    label: str
    frozen: bool = False


@dataclass(frozen=True, order=True)
class Arrow:
    src: int
    dst: int
    mult: int = 1


class IceQuiver:
    """A quiver with a distinguished set of frozen vertices.

    Parameters
    ----------
    vertices : iterable of Vertex
        Vertices in their canonical order. Ids must be unique.
    arrows : iterable of Arrow or ``(src, dst[, mult])`` tuples
        Arrow records. Records for the same ordered pair are summed.

    The constructor does not enforce the quiver axioms so that malformed
    input can be inspected with :func:`validate`. Every quiver produced by
    this library's operations is valid.
    """

    __slots__ = ("_vertices", "_by_id", "_by_label", "_arrows", "_hash")

    def __init__(self, vertices: Iterable[Vertex], arrows: Iterable = ()):
        self._vertices: tuple[Vertex, ...] = tuple(vertices)
        self._by_id: dict[int, Vertex] = {}
        self._by_label: dict[str, Vertex] = {}
        for v in self._vertices:
            self._by_id.setdefault(v.id, v)
            self._by_label.setdefault(v.label, v)
        table: dict[tuple[int, int], int] = {}
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            key = (a.src, a.dst)
            table[key] = table.get(key, 0) + a.mult
        self._arrows = table
        self._hash: int | None = None

    @classmethod
    def _raw(cls, vertices, by_id, by_label, table) -> IceQuiver:
        # internal fast path for mutation; skips re-indexing
        q = cls.__new__(cls)
        q._vertices = vertices
        q._by_id = by_id
        q._by_label = by_label
        q._arrows = table
        q._hash = None
        return q

    @classmethod
    def from_labels(
        cls,
        labels: Sequence[str],
        arrows: Iterable[tuple] = (),
        frozen: Iterable[str] = (),
    ) -> IceQuiver:
        """Build a quiver addressing arrows by label.

        ``arrows`` holds ``(src_label, dst_label)`` or
        ``(src_label, dst_label, mult)`` tuples; vertex ids follow the order
        of ``labels``.

        >>> q = IceQuiver.from_labels(["1", "2"], [("1", "2")])
        >>> q.arrow_list()
        [('1', '2', 1)]
        """
        frozen = set(frozen)
        verts = [Vertex(i, lab, lab in frozen) for i, lab in enumerate(labels)]
        index = {lab: i for i, lab in enumerate(labels)}
        recs = []
        for a in arrows:
            src, dst, *rest = a
            recs.append(Arrow(index[src], index[dst], rest[0] if rest else 1))
        return cls(verts, recs)

    # -- accessors -------------------------------------------------------

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        """Arrow records sorted by ``(src, dst)``."""
        return tuple(Arrow(s, d, m) for (s, d), m in sorted(self._arrows.items()))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(v.label for v in self._vertices)

    def mutable_vertices(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self._vertices if not v.frozen)

    def frozen_vertices(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self._vertices if v.frozen)

    def __len__(self) -> int:
        return len(self._vertices)

    def vertex(self, key: int | str) -> Vertex:
        """Look up a vertex by id (int) or label (str)."""
        table: Mapping = self._by_label if isinstance(key, str) else self._by_id
        try:
            return table[key]
        except KeyError:
            raise UnknownVertex(f"no vertex {key!r} in quiver") from None

    def __contains__(self, key: int | str) -> bool:
        return key in (self._by_label if isinstance(key, str) else self._by_id)

    def mult(self, src: int, dst: int) -> int:
        """Number of arrows ``src -> dst``."""
        return self._arrows.get((src, dst), 0)

    def b(self, u: int, v: int) -> int:
        """Signed multiplicity ``mult(u -> v) - mult(v -> u)``."""
        return self._arrows.get((u, v), 0) - self._arrows.get((v, u), 0)

    def arrow_list(self) -> list[tuple[str, str, int]]:
        """Arrows as sorted ``(src_label, dst_label, mult)`` triples."""
        lab = {v.id: v.label for v in self._vertices}
        return sorted((lab[s], lab[d], m) for (s, d), m in self._arrows.items())

    def iter_arrows(self) -> Iterator[tuple[int, int, int]]:
        for (s, d), m in self._arrows.items():
            yield s, d, m

    # -- equality --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IceQuiver):
            return NotImplemented
        return self._vertices == other._vertices and self._arrows == other._arrows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self._arrows.items())))
        return self._hash

    def __repr__(self) -> str:
        n_frozen = sum(v.frozen for v in self._vertices)
        return (
            f"IceQuiver({len(self._vertices)} vertices, {n_frozen} frozen, "
            f"{len(self._arrows)} arrows)"
        )

    # -- derived quivers -------------------------------------------------

    def induced_subquiver(self, keys: Iterable[int | str]) -> IceQuiver:
        """Full subquiver on the given vertices, ids and order preserved."""
        keep = {self.vertex(k).id for k in keys}
        verts = [v for v in self._vertices if v.id in keep]
        arrows = [
            Arrow(s, d, m) for (s, d), m in self._arrows.items() if s in keep and d in keep
        ]
        return IceQuiver(verts, arrows)

    def mutable_part(self) -> IceQuiver:
        return self.induced_subquiver(v.id for v in self._vertices if not v.frozen)

    def relabel(self, mapping: Mapping[str, str]) -> IceQuiver:
        """Rename vertices; labels missing from ``mapping`` are kept."""
        verts = [Vertex(v.id, mapping.get(v.label, v.label), v.frozen) for v in self._vertices]
        return IceQuiver(verts, self.arrows)


# -- validation ------------------------------------------------------------


def validate(q: IceQuiver) -> list[str]:
    """Return one message per violated quiver invariant; empty means valid."""
    problems: list[str] = []
    seen_ids: set[int] = set()
    seen_labels: set[str] = set()
    for v in q.vertices:
        if v.id in seen_ids:
            problems.append(f"duplicate vertex id {v.id}")
        seen_ids.add(v.id)
        if not v.label:
            problems.append(f"vertex {v.id} has an empty label")
        elif v.label in seen_labels:
            problems.append(f"duplicate label {v.label!r}")
        seen_labels.add(v.label)

    for s, d, m in sorted(q.iter_arrows()):
        name = f"({_name(q, s)},{_name(q, d)})"
        if s not in q or d not in q:
            problems.append(f"arrow {name} references an unknown vertex")
            continue
        if m <= 0:
            problems.append(f"nonpositive multiplicity {m} on arrow {name}")
        if s == d:
            problems.append(f"loop at {_name(q, s)}")
            continue
        if s < d and q.mult(d, s):
            problems.append(f"2-cycle on {name}")
        if q.vertex(s).frozen and q.vertex(d).frozen:
            problems.append(f"frozen-frozen arrow {name}")
    return problems


def _name(q: IceQuiver, vid: int) -> str:
    return q.vertex(vid).label if vid in q else str(vid)


def check_valid(q: IceQuiver) -> IceQuiver:
    problems = validate(q)
    if problems:
        raise InvalidQuiver("; ".join(problems))
    return q


# -- mutation --------------------------------------------------------------


def _resolve(q: IceQuiver, k: int | str) -> Vertex:
    return q.vertex(k)


def mutate(q: IceQuiver, k: int | str) -> IceQuiver:
    """Mutate ``q`` at the mutable vertex ``k`` (id or label).

    Every 2-path ``i -> k -> j`` contributes ``mult(i->k) * mult(k->j)``
    arrows ``i -> j``, arrows at ``k`` are reversed, and opposite arrows
    cancel down to their signed difference. Arrows between two frozen
    vertices are never created.

    >>> q = IceQuiver.from_labels(["1", "2", "3"], [("1", "2"), ("2", "3")])
    >>> mutate(q, "2").arrow_list()
    [('1', '3', 1), ('2', '1', 1), ('3', '2', 1)]
    """
    vk = _resolve(q, k)
    if vk.frozen:
        raise MutationAtFrozen(f"cannot mutate at frozen vertex {vk.label!r}")
    k = vk.id
    by_id = q._by_id
    old = q._arrows

    table: dict[tuple[int, int], int] = {}
    ins: list[tuple[int, int]] = []
    outs: list[tuple[int, int]] = []
    for (s, d), m in old.items():
        if d == k:
            ins.append((s, m))
            table[(k, s)] = m
        elif s == k:
            outs.append((d, m))
            table[(d, k)] = m
        else:
            table[(s, d)] = m

    for i, a in ins:
        fi = by_id[i].frozen
        for j, c in outs:
            if fi and by_id[j].frozen:
                continue
            net = table.pop((i, j), 0) - table.pop((j, i), 0) + a * c
            if net > 0:
                table[(i, j)] = net
            elif net < 0:
                table[(j, i)] = -net

    return IceQuiver._raw(q._vertices, by_id, q._by_label, table)


def framed(q: IceQuiver) -> IceQuiver:
    """Attach a frozen copy ``i'`` to every vertex with an arrow ``i -> i'``."""
    return _frame(q, co=False)


def coframed(q: IceQuiver) -> IceQuiver:
    """Attach a frozen copy ``i'`` to every vertex with an arrow ``i' -> i``."""
    return _frame(q, co=True)


def _frame(q: IceQuiver, co: bool) -> IceQuiver:
    if any(v.frozen for v in q.vertices):
        raise AlreadyIced("framing expects a quiver without frozen vertices")
    check_valid(q)
    verts = list(q.vertices)
    arrows = list(q.arrows)
    next_id = max((v.id for v in verts), default=-1) + 1
    for offset, v in enumerate(q.vertices):
        fid = next_id + offset
        verts.append(Vertex(fid, v.label + "'", True))
        arrows.append(Arrow(fid, v.id) if co else Arrow(v.id, fid))
    return IceQuiver(verts, arrows)


# -- colors ----------------------------------------------------------------


def color_of(q: IceQuiver, v: int | str) -> VertexColor:
    """Color of a mutable vertex.

    Green when no arrow enters ``v`` from a frozen vertex, red when no arrow
    leaves ``v`` towards a frozen vertex. A vertex with no frozen neighbours
    at all satisfies both and is reported green.
    """
    vert = _resolve(q, v)
    if vert.frozen:
        raise FrozenQuery(f"vertex {vert.label!r} is frozen and has no color")
    return _color(q, vert.id)


def _color(q: IceQuiver, vid: int) -> VertexColor:
    by_id = q._by_id
    into = out = False
    for (s, d) in q._arrows:
        if d == vid and by_id[s].frozen:
            into = True
        elif s == vid and by_id[d].frozen:
            out = True
    if not into:
        return VertexColor.GREEN
    if not out:
        return VertexColor.RED
    return VertexColor.MIXED


def colors(q: IceQuiver) -> dict[str, VertexColor]:
    """Colors of every mutable vertex, keyed by label, in vertex order."""
    by_id = q._by_id
    into: set[int] = set()
    out: set[int] = set()
    for (s, d) in q._arrows:
        if by_id[s].frozen:
            into.add(d)
        elif by_id[d].frozen:
            out.add(s)
    result = {}
    for v in q.vertices:
        if v.frozen:
            continue
        if v.id not in into:
            result[v.label] = VertexColor.GREEN
        elif v.id not in out:
            result[v.label] = VertexColor.RED
        else:
            result[v.label] = VertexColor.MIXED
    return result


def green_vertices(q: IceQuiver) -> list[Vertex]:
    """Mutable vertices with no incoming arrow from a frozen vertex, in id order."""
    by_id = q._by_id
    into = {d for (s, d) in q._arrows if by_id[s].frozen}
    return sorted(
        (v for v in q.vertices if not v.frozen and v.id not in into), key=lambda v: v.id
    )


# -- sequences and traces --------------------------------------------------


@dataclass(frozen=True)
class MutationSequence:
    """An ordered list of vertex labels to mutate at, left to right."""

    steps: tuple[str, ...] = ()

    def __init__(self, steps: Iterable[str] = ()):
        object.__setattr__(self, "steps", tuple(steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[str]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def __add__(self, other: Iterable[str]) -> MutationSequence:
        return MutationSequence(self.steps + tuple(other))

    def __str__(self) -> str:
        return " ".join(self.steps)


@dataclass(frozen=True)
class TraceEntry:
    label: str
    quiver: IceQuiver
    colors: dict[str, VertexColor]


@dataclass
class Trace:
    initial: IceQuiver
    entries: list[TraceEntry] = field(default_factory=list)

    @property
    def final(self) -> IceQuiver:
        return self.entries[-1].quiver if self.entries else self.initial

    def __len__(self) -> int:
        return len(self.entries)


class SequenceError(QuiverError):
    """Raised by :func:`apply_sequence`; carries the partial trace."""

    def __init__(self, message: str, step: int, trace: Trace):
        super().__init__(message)
        self.step = step
        self.trace = trace


class NotGreenAt(SequenceError):
    pass


class UnknownLabel(SequenceError):
    pass


def apply_sequence(
    q: IceQuiver, seq: Iterable[str], require_green: bool = True
) -> Trace:
    """Apply mutations in order, recording every intermediate state.

    Raises :class:`NotGreenAt` (when ``require_green``) or
    :class:`UnknownLabel` at the first offending step, 0-based.
    """
    trace = Trace(q)
    state = q
    for step, label in enumerate(seq):
        if label not in state or state.vertex(label).frozen:
            raise UnknownLabel(
                f"step {step}: {label!r} is not a mutable vertex", step, trace
            )
        vid = state.vertex(label).id
        if require_green and _color(state, vid) is not VertexColor.GREEN:
            raise NotGreenAt(f"step {step}: vertex {label!r} is not green", step, trace)
        state = mutate(state, vid)
        trace.entries.append(TraceEntry(label, state, colors(state)))
    return trace


class FailureKind(enum.Enum):
    NOT_GREEN = "NotGreen"
    UNKNOWN_LABEL = "UnknownLabel"
    NOT_ALL_RED_AT_END = "NotAllRedAtEnd"


@dataclass
class VerificationReport:
    accepted: bool
    sequence_length: int
    final_colors: dict[str, VertexColor]
    failure_step: int | None = None
    failure_kind: FailureKind | None = None
    trace: Trace | None = field(default=None, repr=False, compare=False)

    def color_histogram(self) -> dict[str, int]:
        hist = {c.value: 0 for c in VertexColor}
        for c in self.final_colors.values():
            hist[c.value] += 1
        return hist

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "failure_step": self.failure_step,
            "failure_kind": self.failure_kind.value if self.failure_kind else None,
            "sequence_length": self.sequence_length,
            "final_colors": self.color_histogram(),
        }


def is_maximal_green(q: IceQuiver, seq: Iterable[str]) -> VerificationReport:
    """Check that ``seq`` is a maximal green sequence starting from ``q``.

    ``q`` is normally a framed quiver but any valid ice quiver state works.
    Failures are reported, not raised.
    """
    seq = tuple(seq)
    try:
        trace = apply_sequence(q, seq, require_green=True)
    except SequenceError as err:
        kind = FailureKind.NOT_GREEN if isinstance(err, NotGreenAt) else FailureKind.UNKNOWN_LABEL
        return VerificationReport(
            accepted=False,
            sequence_length=len(seq),
            final_colors=colors(err.trace.final),
            failure_step=err.step,
            failure_kind=kind,
            trace=err.trace,
        )
    final = colors(trace.final)
    if all(c is VertexColor.RED for c in final.values()):
        return VerificationReport(True, len(seq), final, trace=trace)
    return VerificationReport(
        accepted=False,
        sequence_length=len(seq),
        final_colors=final,
        failure_kind=FailureKind.NOT_ALL_RED_AT_END,
        trace=trace,
    )


def canonical_key(q: IceQuiver) -> str:
    """Deterministic digest of a labeled quiver (vertices plus arrow multiset)."""
    h = hashlib.blake2b(digest_size=16)
    for v in q.vertices:
        h.update(f"v{v.id}:{v.label}:{int(v.frozen)};".encode())
    for (s, d), m in sorted(q._arrows.items()):
        h.update(f"a{s},{d},{m};".encode())
    return h.hexdigest()
