"""Directed multigraphs with two distinguished vertices s and t.

Everything downstream consumes the queries defined here: simple s-t-path
enumeration, useless-edge detection, cycle finding, quasi-cycles and their
exact disjoint packing, and unit-capacity flow for edge-disjoint paths.

Graphs are immutable; deletion and contraction return new graphs and never
renumber the surviving edge ids, so edge subsets remain comparable between
a graph and its minors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Optional, Sequence

from .errors import ResourceLimitError

Vertex = Hashable

QUASI_CYCLE_PACKING_LIMIT = 64


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertices v0..vn and edges e1..en.

    Each edge ei runs from v(i-1) to vi.  Simple s-t-paths and cycle
    witnesses are both represented this way; a cycle repeats its first
    vertex at the end.
    """

    vertices: tuple
    edges: tuple[int, ...]

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def is_closed(self) -> bool:
        return len(self.vertices) >= 1 and self.vertices[0] == self.vertices[-1]


@dataclass(frozen=True)
class QuasiCycle:
    """Either the edge set of a cycle or a singleton holding a useless edge."""

    edges: frozenset[int]
    kind: str  # "cycle" | "useless-edge"


@dataclass(frozen=True)
class Digraph:
    """Directed multigraph (vertices, edges, s, t) with integer edge ids.

    ``edges`` holds (edge_id, source, target) triples; parallel edges and
    self-loops are permitted, and s = t is permitted.  ``edge_labels``
    optionally carries display names aligned with ``edges`` (used by the
    file format; algorithms ignore it).
    """

    vertices: tuple
    edges: tuple[tuple[int, Vertex, Vertex], ...]
    s: Vertex
    t: Vertex
    edge_labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        declared = set(self.vertices)
        if len(declared) != len(self.vertices):
            raise ValueError("duplicate vertex")
        if self.s not in declared or self.t not in declared:
            raise ValueError("s and t must be declared vertices")
        seen_ids = set()
        for eid, u, v in self.edges:
            if eid in seen_ids:
                raise ValueError(f"duplicate edge id {eid}")
            seen_ids.add(eid)
            if u not in declared or v not in declared:
                raise ValueError(f"edge {eid} uses an undeclared vertex")
        if self.edge_labels is not None and len(self.edge_labels) != len(self.edges):
            raise ValueError("edge_labels must align with edges")

    @classmethod
    def build(cls, vertices: Sequence, edges: Sequence[tuple], s, t,
              labels: Optional[Sequence[str]] = None) -> "Digraph":
        """Construct from (source, target) pairs, assigning ids 0,1,2,..."""
        triples = tuple((i, u, v) for i, (u, v) in enumerate(edges))
        return cls(tuple(vertices), triples, s, t,
                   tuple(labels) if labels is not None else None)

    # -- bookkeeping -------------------------------------------------------

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(eid for eid, _, _ in self.edges)

    @cached_property
    def edge_by_id(self) -> dict[int, tuple[Vertex, Vertex]]:
        return {eid: (u, v) for eid, u, v in self.edges}

    @cached_property
    def _out(self) -> dict:
        """Out-adjacency: vertex -> tuple of (edge_id, target), id-ascending."""
        out: dict = {v: [] for v in self.vertices}
        for eid, u, v in sorted(self.edges):
            out[u].append((eid, v))
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _in(self) -> dict:
        inc: dict = {v: [] for v in self.vertices}
        for eid, u, v in sorted(self.edges):
            inc[v].append((eid, u))
        return {v: tuple(es) for v, es in inc.items()}

    def label_map(self) -> dict[int, str]:
        """Edge id -> display label (falls back to the decimal id)."""
        if self.edge_labels is None:
            return {eid: str(eid) for eid in self.edge_ids}
        return {eid: lbl for (eid, _, _), lbl in zip(self.edges, self.edge_labels)}

    def _require_edge(self, e: int) -> tuple[Vertex, Vertex]:
        try:
            return self.edge_by_id[e]
        except KeyError:
            raise ValueError(f"unknown edge id {e}") from None

    # -- deletion and contraction ------------------------------------------

    def delete_edge(self, e: int) -> "Digraph":
        """Remove edge e; vertices and the s, t roles are unchanged."""
        self._require_edge(e)
        keep = [i for i, (eid, _, _) in enumerate(self.edges) if eid != e]
        labels = None
        if self.edge_labels is not None:
            labels = tuple(self.edge_labels[i] for i in keep)
        return Digraph(self.vertices, tuple(self.edges[i] for i in keep),
                       self.s, self.t, labels)

    def contract_edge(self, e: int) -> "Digraph":
        """Identify the endpoints of e and drop e itself.

        The merged vertex keeps the source's id; every other edge is
        retargeted onto it.  If s or t was an endpoint, the merged vertex
        inherits the role (both roles if e ran from s to t).  Contracting
        a self-loop is the same as deleting it.
        """
        u, v = self._require_edge(e)
        if u == v:
            return self.delete_edge(e)
        vertices = tuple(w for w in self.vertices if w != v)
        keep = [i for i, (eid, _, _) in enumerate(self.edges) if eid != e]
        edges = tuple(
            (eid, u if a == v else a, u if b == v else b)
            for eid, a, b in (self.edges[i] for i in keep)
        )
        labels = None
        if self.edge_labels is not None:
            labels = tuple(self.edge_labels[i] for i in keep)
        s = u if self.s == v else self.s
        t = u if self.t == v else self.t
        return Digraph(vertices, edges, s, t, labels)

    def subgraph(self, edge_ids) -> "Digraph":
        """Restriction to a subset of edges (vertices and s, t kept)."""
        wanted = frozenset(edge_ids)
        unknown = wanted - set(self.edge_ids)
        if unknown:
            raise ValueError(f"unknown edge ids {sorted(unknown)}")
        keep = [i for i, (eid, _, _) in enumerate(self.edges) if eid in wanted]
        labels = None
        if self.edge_labels is not None:
            labels = tuple(self.edge_labels[i] for i in keep)
        return Digraph(self.vertices, tuple(self.edges[i] for i in keep),
                       self.s, self.t, labels)

    # -- paths ---------------------------------------------------------------

    def has_st_path(self) -> bool:
        """True iff t is reachable from s (a walk exists iff a path does)."""
        if self.s == self.t:
            return True
        seen = {self.s}
        stack = [self.s]
        while stack:
            v = stack.pop()
            for _, w in self._out.get(v, ()):
                if w == self.t:
                    return True
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def has_st_path_within(self, edge_ids) -> bool:
        """Reachability of t from s using only the given edges.

        Same answer as ``subgraph(edge_ids).has_st_path()`` without
        building the restricted graph; subset enumeration leans on this.
        """
        if self.s == self.t:
            return True
        out: dict = {}
        for eid, u, v in self.edges:
            if eid in edge_ids:
                out.setdefault(u, []).append(v)
        seen = {self.s}
        stack = [self.s]
        while stack:
            v = stack.pop()
            for w in out.get(v, ()):
                if w == self.t:
                    return True
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def enumerate_st_paths(self) -> list[Walk]:
        """All simple s-t-paths, lexicographic by edge-id sequence.

        When s = t the only s-t-path is the trivial edgeless one.
        """
        if self.s == self.t:
            return [Walk((self.s,), ())]
        paths: list[Walk] = []
        out = self._out
        vseq = [self.s]
        eseq: list[int] = []
        visited = {self.s}

        def extend(v):
            for eid, w in out.get(v, ()):
                if w == self.t:
                    paths.append(Walk(tuple(vseq) + (w,), tuple(eseq) + (eid,)))
                elif w not in visited:
                    visited.add(w)
                    vseq.append(w)
                    eseq.append(eid)
                    extend(w)
                    eseq.pop()
                    vseq.pop()
                    visited.discard(w)

        extend(self.s)
        return paths

    def shortest_st_path_length(self) -> Optional[int]:
        """Edge count of a shortest s-t-path; None when t is unreachable."""
        if self.s == self.t:
            return 0
        dist = {self.s: 0}
        frontier = [self.s]
        while frontier:
            nxt = []
            for v in frontier:
                for _, w in self._out.get(v, ()):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        if w == self.t:
                            return dist[w]
                        nxt.append(w)
            frontier = nxt
        return None

    def _reachable_from_s(self) -> set:
        seen = {self.s}
        stack = [self.s]
        while stack:
            v = stack.pop()
            for _, w in self._out.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def _coreachable_to_t(self) -> set:
        seen = {self.t}
        stack = [self.t]
        while stack:
            v = stack.pop()
            for _, w in self._in.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    # -- cycles and useless edges ---------------------------------------------

    def find_cycle(self) -> Optional[Walk]:
        """First cycle found by depth-first search in edge-id order, or None.

        Self-loops count as cycles.  Vertices are tried in declaration
        order, so the answer is deterministic.
        """
        color: dict = {}
        stack_v: list = []
        stack_e: list[int] = []

        def dfs(v) -> Optional[Walk]:
            color[v] = 1
            stack_v.append(v)
            for eid, w in self._out.get(v, ()):
                c = color.get(w, 0)
                if c == 1:
                    i = stack_v.index(w)
                    return Walk(tuple(stack_v[i:]) + (w,), tuple(stack_e[i:]) + (eid,))
                if c == 0:
                    stack_e.append(eid)
                    found = dfs(w)
                    stack_e.pop()
                    if found is not None:
                        return found
            stack_v.pop()
            color[v] = 2
            return None

        for v in self.vertices:
            if color.get(v, 0) == 0:
                found = dfs(v)
                if found is not None:
                    return found
        return None

    def nonsinks(self) -> frozenset:
        """Vertices with at least one outgoing edge."""
        return frozenset(u for _, u, _ in self.edges)

    def useless_edges(self) -> frozenset[int]:
        """Edges lying on no simple s-t-path.

        On acyclic graphs an edge (u, v) is useful iff u is reachable from
        s and t is reachable from v: the concatenated walk cannot revisit
        a vertex without closing a cycle.  With cycles present that
        shortcut is unsound, so the paths are enumerated instead.
        """
        if self.find_cycle() is None:
            fwd = self._reachable_from_s()
            bwd = self._coreachable_to_t()
            return frozenset(
                eid for eid, u, v in self.edges if not (u in fwd and v in bwd)
            )
        used: set[int] = set()
        for path in self.enumerate_st_paths():
            used.update(path.edges)
        return frozenset(self.edge_ids) - used

    def _simple_cycle_edge_sets(self) -> list[frozenset[int]]:
        """Edge sets of all simple cycles, each listed once.

        A cycle is rooted at its earliest vertex (declaration order) and the
        search never dips below that root, so rotations collapse to one
        representative.
        """
        vindex = {v: i for i, v in enumerate(self.vertices)}
        out = self._out
        found: list[frozenset[int]] = []
        seen: set[frozenset[int]] = set()

        for start in self.vertices:
            base = vindex[start]
            onpath = {start}
            eseq: list[int] = []

            def dfs(v):
                for eid, w in out.get(v, ()):
                    if vindex[w] < base:
                        continue
                    if w == start:
                        es = frozenset(eseq + [eid])
                        if es not in seen:
                            seen.add(es)
                            found.append(es)
                    elif w not in onpath:
                        onpath.add(w)
                        eseq.append(eid)
                        dfs(w)
                        eseq.pop()
                        onpath.discard(w)

            dfs(start)
        return found

    def quasi_cycles(self) -> list[QuasiCycle]:
        """Cycle edge sets plus singletons of useless edges, deduplicated.

        A self-loop is both; it is reported once, as a cycle.
        """
        cycle_sets = self._simple_cycle_edge_sets()
        taken = set(cycle_sets)
        result = [QuasiCycle(es, "cycle") for es in cycle_sets]
        for eid in sorted(self.useless_edges()):
            singleton = frozenset((eid,))
            if singleton not in taken:
                result.append(QuasiCycle(singleton, "useless-edge"))
        result.sort(key=lambda qc: (len(qc.edges), sorted(qc.edges)))
        return result

    def max_disjoint_quasi_cycles(self, limit: int = QUASI_CYCLE_PACKING_LIMIT
                                  ) -> tuple[int, tuple[QuasiCycle, ...]]:
        """Exact maximum packing of pairwise edge-disjoint quasi-cycles.

        Branch and bound over the quasi-cycle list; refuses to run when the
        list exceeds ``limit`` entries.
        """
        qcs = self.quasi_cycles()
        if len(qcs) > limit:
            raise ResourceLimitError(
                f"{len(qcs)} quasi-cycles exceed the packing limit of {limit}")
        best: list[QuasiCycle] = []

        def search(i: int, chosen: list[QuasiCycle], used: frozenset[int]):
            nonlocal best
            if len(chosen) > len(best):
                best = list(chosen)
            if i == len(qcs) or len(chosen) + (len(qcs) - i) <= len(best):
                return
            qc = qcs[i]
            if not (qc.edges & used):
                chosen.append(qc)
                search(i + 1, chosen, used | qc.edges)
                chosen.pop()
            search(i + 1, chosen, used)

        search(0, [], frozenset())
        return len(best), tuple(best)

    # -- flows ------------------------------------------------------------------

    def _max_flow(self) -> tuple[int, dict[int, int]]:
        """Unit-capacity max flow from s to t via augmenting-path search."""
        flow = {eid: 0 for eid in self.edge_ids}
        value = 0
        while True:
            parent: dict = {self.s: None}
            how: dict = {}
            frontier = [self.s]
            while frontier and self.t not in parent:
                nxt = []
                for v in frontier:
                    for eid, w in self._out.get(v, ()):
                        if flow[eid] == 0 and w not in parent:
                            parent[w] = v
                            how[w] = (eid, +1)
                            nxt.append(w)
                    for eid, w in self._in.get(v, ()):
                        if flow[eid] == 1 and w not in parent:
                            parent[w] = v
                            how[w] = (eid, -1)
                            nxt.append(w)
                frontier = nxt
            if self.t not in parent:
                return value, flow
            v = self.t
            while v != self.s:
                eid, direction = how[v]
                flow[eid] += direction
                v = parent[v]
            value += 1

    def max_edge_disjoint_st_paths(self):
        """Max number of pairwise edge-disjoint s-t-paths.

        ``math.inf`` when s = t: the trivial path replicates without using
        any edge, so every bound is met.
        """
        if self.s == self.t:
            return math.inf
        value, _ = self._max_flow()
        return value

    def min_st_cutset_size(self) -> int:
        """Size of a smallest edge set meeting every s-t-path.

        Extracted from the residual graph of a maximum flow: the edges
        crossing out of the residual-reachable side form a minimum cut.
        """
        if self.s == self.t:
            raise ValueError("no cut-set exists when s = t")
        _, flow = self._max_flow()
        side = {self.s}
        stack = [self.s]
        while stack:
            v = stack.pop()
            for eid, w in self._out.get(v, ()):
                if flow[eid] == 0 and w not in side:
                    side.add(w)
                    stack.append(w)
            for eid, w in self._in.get(v, ()):
                if flow[eid] == 1 and w not in side:
                    side.add(w)
                    stack.append(w)
        return sum(1 for _, u, v in self.edges if u in side and v not in side)
