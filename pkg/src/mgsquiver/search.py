"""Bounded breadth-first enumeration of maximal green sequences.

The search frames the input quiver and walks the tree of green mutations
level by level. Successors are generated in ascending vertex-id order and
results are sorted by ``(length, vertex ids step by step)``, so the output
does not depend on deduplication or on the number of worker processes.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .generators import BadParameter
from .quiver import (
    IceQuiver,
    MutationSequence,
    canonical_key,
    framed,
    green_vertices,
    is_maximal_green,
    mutate,
)

log = logging.getLogger(__name__)

Prefix = tuple[int, ...]


@dataclass(frozen=True)
class SearchConfig:
    max_len: int
    mode: str = "all"
    dedup: bool = True
    worker_count: int = 1
    max_states: int | None = 500_000

    def __post_init__(self):
        if self.max_len < 1:
            raise BadParameter(f"max_len must be >= 1, got {self.max_len}")
        if self.mode not in ("all", "first"):
            raise BadParameter(f"mode must be 'all' or 'first', got {self.mode!r}")
        if self.worker_count < 1:
            raise BadParameter(f"worker_count must be >= 1, got {self.worker_count}")


@dataclass
class SearchResult:
    found: list[MutationSequence]
    exhausted: bool
    states_visited: int
    wall_time: float
    resource_limited: bool = False
    max_len: int = field(default=0, repr=False)


class Existence(NamedTuple):
    sequence: MutationSequence | None
    exhausted: bool


def _expand(state: IceQuiver) -> list[tuple[int, IceQuiver, bool, str]]:
    out = []
    for v in green_vertices(state):
        child = mutate(state, v.id)
        out.append((v.id, child, not green_vertices(child), canonical_key(child)))
    return out


def _expand_many(states: list[IceQuiver]) -> list[list[tuple[int, IceQuiver, bool, str]]]:
    return [_expand(s) for s in states]


def _chunks(items: list, n: int) -> list[list]:
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def enumerate_mgs(q: IceQuiver, cfg: SearchConfig) -> SearchResult:
    """Enumerate the maximal green sequences of ``q`` up to ``cfg.max_len``.

    In ``"all"`` mode every maximal green sequence of length at most
    ``max_len`` is returned. In ``"first"`` mode only the shortest one
    (ties broken lexicographically by vertex id) is returned.

    If more than ``cfg.max_states`` states get expanded, the search stops
    and reports ``resource_limited=True`` together with everything found so
    far.
    """
    if any(v.frozen for v in q.vertices):
        raise BadParameter("search expects a quiver without frozen vertices")
    start = time.perf_counter()
    root = framed(q)
    label = {v.id: v.label for v in root.vertices}

    pool = ProcessPoolExecutor(cfg.worker_count) if cfg.worker_count > 1 else None
    try:
        if cfg.mode == "first":
            walk = _first
        elif cfg.dedup:
            walk = _all_dag
        else:
            walk = _all_tree
        found, visited, limited, exhausted = walk(root, cfg, _Expander(pool, cfg.worker_count))
    finally:
        if pool is not None:
            pool.shutdown()

    found.sort(key=lambda p: (len(p), p))
    sequences = [MutationSequence(label[v] for v in p) for p in found]
    for seq in sequences:
        if not is_maximal_green(root, seq).accepted:
            raise AssertionError(f"search emitted a non-maximal sequence: {seq}")
    return SearchResult(
        found=sequences,
        exhausted=exhausted,
        states_visited=visited,
        wall_time=time.perf_counter() - start,
        resource_limited=limited,
        max_len=cfg.max_len,
    )


class _Expander:
    def __init__(self, pool: ProcessPoolExecutor | None, workers: int):
        self.pool = pool
        self.workers = workers

    def __call__(self, states: list[IceQuiver]):
        if self.pool is None or len(states) < 2:
            return _expand_many(states)
        out = []
        for part in self.pool.map(_expand_many, _chunks(states, self.workers)):
            out.extend(part)
        return out


def _over_budget(cfg: SearchConfig, visited: int, more: int) -> bool:
    return cfg.max_states is not None and visited + more > cfg.max_states


def _first(root, cfg, expand):
    # BFS over distinct states; the frontier stays sorted by prefix, so the
    # first prefix to reach a state is the lexicographically smallest one
    if not green_vertices(root):
        return [()], 0, False, True
    seen = {canonical_key(root)}
    frontier: list[tuple[IceQuiver, Prefix]] = [(root, ())]
    visited = 0
    for depth in range(1, cfg.max_len + 1):
        if not frontier:
            break
        if _over_budget(cfg, visited, len(frontier)):
            return [], visited, True, False
        visited += len(frontier)
        nxt = []
        found: list[Prefix] = []
        for (_, prefix), children in zip(frontier, expand([s for s, _ in frontier])):
            for vid, child, all_red, key in children:
                if all_red:
                    found.append(prefix + (vid,))
                elif key not in seen:
                    seen.add(key)
                    nxt.append((child, prefix + (vid,)))
        if found:
            best = min(found)
            return [best], visited, False, not nxt or depth == cfg.max_len
        frontier = nxt
    return [], visited, False, True


def _all_dag(root, cfg, expand):
    # every distinct state is expanded once; parent edges are kept so that
    # all paths of length <= max_len can be rebuilt backwards from the
    # all-red states
    if not green_vertices(root):
        return [()], 0, False, True
    rkey = canonical_key(root)
    depth_of: dict[str, int] = {rkey: 0}
    parents: dict[str, list[tuple[str, int]]] = {rkey: []}
    terminals: list[str] = []
    frontier: dict[str, IceQuiver] = {rkey: root}
    visited = 0
    limited = False
    for depth in range(1, cfg.max_len + 1):
        if not frontier:
            break
        if _over_budget(cfg, visited, len(frontier)):
            limited = True
            break
        visited += len(frontier)
        keys = list(frontier)
        nxt: dict[str, IceQuiver] = {}
        for pkey, children in zip(keys, expand([frontier[k] for k in keys])):
            for vid, child, all_red, key in children:
                if key not in depth_of:
                    depth_of[key] = depth
                    parents[key] = []
                    if all_red:
                        terminals.append(key)
                    else:
                        nxt[key] = child
                parents[key].append((pkey, vid))
        frontier = nxt

    memo: dict[tuple[str, int], list[Prefix]] = {}

    def paths(key: str, length: int) -> list[Prefix]:
        # all green paths of exactly ``length`` steps from the root to ``key``
        if key == rkey:
            return [()] if length == 0 else []
        if (key, length) not in memo:
            memo[(key, length)] = [
                p + (vid,)
                for pkey, vid in parents[key]
                if depth_of[pkey] <= length - 1
                for p in paths(pkey, length - 1)
            ]
        return memo[(key, length)]

    found = [
        p
        for key in terminals
        for length in range(depth_of[key], cfg.max_len + 1)
        for p in paths(key, length)
    ]
    return found, visited, limited, not limited


def _all_tree(root, cfg, expand):
    # plain depth-first walk without state merging
    if not green_vertices(root):
        return [()], 0, False, True
    found: list[Prefix] = []
    visited = 0
    stack: list[tuple[IceQuiver, Prefix]] = [(root, ())]
    while stack:
        state, prefix = stack.pop()
        if _over_budget(cfg, visited, 1):
            return found, visited, True, False
        visited += 1
        for vid, child, all_red, _ in reversed(_expand(state)):
            ext = prefix + (vid,)
            if all_red:
                found.append(ext)
            elif len(ext) < cfg.max_len:
                stack.append((child, ext))
    return found, visited, False, True


def exists_mgs(q: IceQuiver, cfg: SearchConfig) -> Existence:
    """Shortest maximal green sequence within ``cfg.max_len``, if any.

    >>> from mgsquiver.quiver import IceQuiver
    >>> a2 = IceQuiver.from_labels(["1", "2"], [("1", "2")])
    >>> list(exists_mgs(a2, SearchConfig(max_len=6)).sequence)
    ['1', '2']
    """
    if cfg.mode != "first":
        cfg = SearchConfig(cfg.max_len, "first", cfg.dedup, cfg.worker_count, cfg.max_states)
    res = enumerate_mgs(q, cfg)
    return Existence(res.found[0] if res.found else None, res.exhausted)
