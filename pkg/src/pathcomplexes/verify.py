"""Deterministic graph corpus and the cross-checking harness.

Every structural identity the package relies on is registered here as a
named check; ``run_all_checks`` executes the whole registry against one
graph and reports pass/fail/skip per check.  Conditional checks whose
hypotheses never fire are skipped, never silently passed.  The registry
is compared against an explicit manifest so that a check cannot be lost
without a test noticing.

The corpus generator uses splitmix64 (64-bit state, golden-gamma
increment, xor-shift-multiply finalizer), so the same spec reproduces the
same graphs on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .digraph import Digraph, QUASI_CYCLE_PACKING_LIMIT
from .errors import ResourceLimitError
from .graphio import format_graph
from .grapes import (GRAPE_GROUND_LIMIT, BaseCase, GrapeNode, Split,
                     find_cone_witness, is_combinatorial_grape, is_strong_grape,
                     replay_certificate)
from .pathcomplex import (build_pf, build_pf_r, build_pm, build_pm_r,
                          check_divisibility, chi_pf_closed, chi_pm_closed,
                          fpoly_pf_dc, fpoly_pm_dc, homotopy_pf, homotopy_pm)
from .polynomial import IntPolynomial
from .simplicial import SimplicialComplex, full_simplex, proper_subsets_complex

DEFAULT_ENUM_LIMIT = 12

# -- pseudo-random generation ----------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output = finalizer(state)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n); modulo bias is irrelevant at corpus scale."""
        return self.next_u64() % n


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters pinning a corpus; equal specs give identical corpora.

    ``graph_count`` random graphs are appended after the fixture battery.
    ``edge_weights``, when nonempty, gives relative weights for drawing
    the edge count in 0..max_edges (uniform otherwise).
    """

    graph_count: int
    max_vertices: int = 6
    max_edges: int = 8
    edge_weights: tuple[int, ...] = ()
    allow_self_loops: bool = True
    allow_parallel: bool = True
    seed: int = 1


# -- fixtures --------------------------------------------------------------------


def example_graph() -> Digraph:
    """Five-vertex, seven-edge worked example: two edge-disjoint routes
    from s to t, one cycle, no useless edges."""
    return Digraph.build(
        ["s", "p", "q", "r", "t"],
        [("s", "p"), ("p", "r"), ("r", "t"), ("s", "q"),
         ("q", "t"), ("q", "p"), ("r", "q")],
        "s", "t",
        labels=["a", "b", "c", "d", "e", "f", "g"],
    )


def parallel_graph(k: int) -> Digraph:
    """k parallel edges from s straight to t."""
    return Digraph.build(["s", "t"], [("s", "t")] * k, "s", "t",
                         labels=[f"e{i}" for i in range(k)])


def path_graph(length: int) -> Digraph:
    """A single directed path of the given edge count from s to t."""
    if length < 1:
        raise ValueError("length must be at least 1")
    names = ["s"] + [f"v{i}" for i in range(1, length)] + ["t"]
    edges = list(zip(names, names[1:]))
    return Digraph.build(names, edges, "s", "t",
                         labels=[f"e{i}" for i in range(length)])


def edgeless_graph() -> Digraph:
    return Digraph.build(["s", "t"], [], "s", "t", labels=[])


def loop_graph() -> Digraph:
    """One vertex playing both s and t, carrying a self-loop."""
    return Digraph.build(["s"], [("s", "s")], "s", "s", labels=["e0"])


def double_cycle_graph() -> Digraph:
    """Two edge-disjoint 2-cycles between u and v, every edge on some
    s-t-path: packing number exactly 2 with no useless edges."""
    return Digraph.build(
        ["s", "u", "v", "t"],
        [("s", "u"), ("s", "v"), ("u", "v"), ("v", "u"),
         ("u", "v"), ("v", "u"), ("u", "t"), ("v", "t")],
        "s", "t",
        labels=[f"e{i}" for i in range(8)],
    )


def fixture_battery() -> list[Digraph]:
    graphs = [example_graph()]
    graphs += [parallel_graph(k) for k in range(1, 7)]
    graphs += [path_graph(n) for n in range(1, 5)]
    graphs += [edgeless_graph(), loop_graph(), double_cycle_graph()]
    return graphs


FIXTURE_NAMES = (
    "example",
    "parallel-1", "parallel-2", "parallel-3", "parallel-4", "parallel-5", "parallel-6",
    "path-1", "path-2", "path-3", "path-4",
    "edgeless", "self-loop", "double-cycle",
)


def _random_graph(rng: SplitMix64, spec: CorpusSpec) -> Digraph:
    """One corpus graph.  The drawing order below is part of the corpus
    contract: vertex count, s, t, edge count, then per edge source and
    target.  Disallowed self-loops or duplicate arcs are dropped, not
    redrawn, so the consumed stream length stays predictable."""
    n = 1 + rng.below(spec.max_vertices)
    names = [f"v{i}" for i in range(n)]
    s = names[rng.below(n)]
    t = names[rng.below(n)]
    if spec.edge_weights:
        weights = spec.edge_weights[: spec.max_edges + 1]
        total = sum(weights)
        draw = rng.below(total)
        m = 0
        for i, w in enumerate(weights):
            if draw < w:
                m = i
                break
            draw -= w
    else:
        m = rng.below(spec.max_edges + 1)
    edges: list[tuple[str, str]] = []
    for _ in range(m):
        u = names[rng.below(n)]
        v = names[rng.below(n)]
        if not spec.allow_self_loops and u == v:
            continue
        if not spec.allow_parallel and (u, v) in edges:
            continue
        edges.append((u, v))
    return Digraph.build(names, edges, s, t,
                         labels=[f"e{i}" for i in range(len(edges))])


def generate_corpus(spec: CorpusSpec) -> list[Digraph]:
    """Fixture battery first, then ``graph_count`` random graphs."""
    if spec.max_edges < 0 or spec.max_vertices < 1 or spec.graph_count < 0:
        raise ValueError("corpus spec out of range")
    if spec.max_edges > 20:
        raise ValueError("max_edges beyond the enumeration guard of 20")
    graphs = fixture_battery()
    rng = SplitMix64(spec.seed)
    for _ in range(spec.graph_count):
        graphs.append(_random_graph(rng, spec))
    return graphs


# -- per-graph context --------------------------------------------------------------


class _Ctx:
    """Lazily computed artifacts shared by the checks on one graph."""

    def __init__(self, g: Digraph, enum_limit: int, grape_limit: int,
                 packing_limit: int):
        self.g = g
        self.enum_limit = enum_limit
        self.grape_limit = grape_limit
        self.packing_limit = packing_limit
        self._cache: dict = {}

    def can_enumerate(self) -> bool:
        return len(self.g.edges) <= self.enum_limit

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def pm(self) -> SimplicialComplex:
        return self._get("pm", lambda: build_pm(self.g))

    @property
    def pf(self) -> SimplicialComplex:
        return self._get("pf", lambda: build_pf(self.g))

    @property
    def paths(self):
        return self._get("paths", self.g.enumerate_st_paths)

    @property
    def useless(self):
        return self._get("useless", self.g.useless_edges)

    def both(self):
        return (("pm", self.pm), ("pf", self.pf))


_SKIP = ("skip", "hypotheses never fired")
_ENUM_SKIP = ("skip", "edge count above enumeration limit")
_PASS = ("pass", "")


def _fail(detail: str):
    return ("fail", detail)


# -- check registry -------------------------------------------------------------------

_REGISTRY: list[tuple[str, Callable[[_Ctx], tuple[str, str]]]] = []


def _check(check_id: str):
    def register(fn):
        _REGISTRY.append((check_id, fn))
        return fn
    return register


@_check("build-oracles-downward-closed")
def _chk_build(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        c.validate()
        if c.ground != tuple(ctx.g.edge_ids):
            return _fail(f"{name} ground mismatch")
    return _PASS


@_check("pf-pm-alexander-dual")
def _chk_dual(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    if ctx.pf.alexander_dual() != ctx.pm:
        return _fail("dual of path-free complex is not the path-missing complex")
    return _PASS


@_check("dual-involution")
def _chk_dual_inv(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        if c.alexander_dual().alexander_dual() != c:
            return _fail(f"double dual of {name} differs")
    return _PASS


@_check("pf-minimal-nonfaces-are-paths")
def _chk_pf_nonfaces(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    got = set(ctx.pf.minimal_nonfaces())
    want = {p.edge_set() for p in ctx.paths}
    if got != want:
        return _fail(f"minimal non-faces {sorted(map(sorted, got))} "
                     f"!= path edge sets {sorted(map(sorted, want))}")
    return _PASS


@_check("pm-minimal-nonfaces-are-min-cuts")
def _chk_pm_nonfaces(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    from itertools import combinations
    path_sets = [p.edge_set() for p in ctx.paths]
    ids = ctx.g.edge_ids
    # Ascending by size, so any hitting set found with a strictly smaller
    # hitting subset is caught by the superset test; what remains is minimal.
    minimal: set[frozenset] = set()
    for k in range(len(ids) + 1):
        for combo in combinations(ids, k):
            f = frozenset(combo)
            if any(f > h for h in minimal):
                continue
            if all(f & p for p in path_sets):
                minimal.add(f)
    got = set(ctx.pm.minimal_nonfaces())
    if got != minimal:
        return _fail("minimal non-faces differ from minimal cut-sets")
    return _PASS


@_check("facets-complement-dual-nonfaces")
def _chk_facet_dual(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        gset = frozenset(c.ground)
        want = {gset - n for n in c.alexander_dual().minimal_nonfaces()}
        if set(c.facets()) != want:
            return _fail(f"facets of {name} are not dual non-face complements")
    return _PASS


@_check("pf-codimension-is-min-cut")
def _chk_pf_codim(ctx: _Ctx):
    if ctx.g.s == ctx.g.t:
        return _SKIP
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    if ctx.pf.codimension() != ctx.g.min_st_cutset_size():
        return _fail(f"codim {ctx.pf.codimension()} != min cut {ctx.g.min_st_cutset_size()}")
    return _PASS


@_check("pm-codimension-is-shortest-path")
def _chk_pm_codim(ctx: _Ctx):
    if not ctx.g.has_st_path():
        return _SKIP
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    if ctx.pm.codimension() != ctx.g.shortest_st_path_length():
        return _fail(f"codim {ctx.pm.codimension()} != shortest path "
                     f"{ctx.g.shortest_st_path_length()}")
    return _PASS


@_check("deletion-star-partition")
def _chk_dl_st(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        for w in c.ground:
            dl, st, lk = c.deletion(w), c.star(w), c.link(w)
            if dl.faces | st.faces != c.faces:
                return _fail(f"{name}: deletion+star misses faces at {w}")
            if dl.faces & st.faces != lk.faces:
                return _fail(f"{name}: deletion∩star is not the link at {w}")
            if not st.is_cone_with_apex(w):
                return _fail(f"{name}: star at {w} is not a cone")
            if sum(1 for f in c.faces if w in f) != len(lk.faces):
                return _fail(f"{name}: link size mismatch at {w}")
    return _PASS


@_check("contraction-path-correspondence")
def _chk_contract_paths(ctx: _Ctx):
    from itertools import combinations
    g = ctx.g
    source_edges = [eid for eid, u, _ in sorted(g.edges) if u == g.s]
    if not source_edges:
        return _SKIP
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for e in source_edges:
        contracted = g.contract_edge(e)
        rest = [eid for eid in g.edge_ids if eid != e]
        for k in range(len(rest) + 1):
            for combo in combinations(rest, k):
                inner = frozenset(combo)
                with_e = inner | {e}
                if g.has_st_path_within(with_e) != contracted.has_st_path_within(inner):
                    return _fail(f"path correspondence broken at edge {e}, "
                                 f"set {sorted(with_e)}")
    return _PASS


@_check("pm-link-deletion-match-graph-ops")
def _chk_pm_linkdel(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    g = ctx.g
    for eid, u, _ in g.edges:
        if ctx.pm.link(eid) != build_pm(g.delete_edge(eid)):
            return _fail(f"link at {eid} differs from deletion-graph complex")
        if u == g.s and ctx.pm.deletion(eid) != build_pm(g.contract_edge(eid)):
            return _fail(f"deletion at {eid} differs from contraction-graph complex")
    return _PASS


@_check("pf-link-deletion-match-graph-ops")
def _chk_pf_linkdel(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    g = ctx.g
    for eid, u, _ in g.edges:
        if ctx.pf.deletion(eid) != build_pf(g.delete_edge(eid)):
            return _fail(f"deletion at {eid} differs from deletion-graph complex")
        if u == g.s and ctx.pf.link(eid) != build_pf(g.contract_edge(eid)):
            return _fail(f"link at {eid} differs from contraction-graph complex")
    return _PASS


@_check("target-s-edges-useless")
def _chk_target_s(ctx: _Ctx):
    into_s = [eid for eid, _, v in ctx.g.edges if v == ctx.g.s]
    if not into_s:
        return _SKIP
    missing = [e for e in into_s if e not in ctx.useless]
    if missing:
        return _fail(f"edges into s not useless: {missing}")
    return _PASS


@_check("contract-shared-target-makes-useless")
def _chk_shared_target(ctx: _Ctx):
    g = ctx.g
    fired = False
    for eid, u, v in g.edges:
        if u != g.s:
            continue
        if sum(1 for _, _, w in g.edges if w == v) < 2:
            continue
        fired = True
        if not g.contract_edge(eid).useless_edges():
            return _fail(f"contracting {eid} left no useless edge")
    return _PASS if fired else _SKIP


@_check("delete-sole-entry-makes-useless")
def _chk_sole_entry(ctx: _Ctx):
    g = ctx.g
    fired = False
    for eid, u, v in g.edges:
        if u != g.s or eid in ctx.useless or len(g.edges) <= 1:
            continue
        if sum(1 for _, _, w in g.edges if w == v) != 1:
            continue
        fired = True
        if not g.delete_edge(eid).useless_edges():
            return _fail(f"deleting {eid} left no useless edge")
    return _PASS if fired else _SKIP


@_check("contract-drops-one-nonsink")
def _chk_nonsink_drop(ctx: _Ctx):
    g = ctx.g
    if ctx.useless:
        return _SKIP
    fired = False
    for eid, u, v in g.edges:
        if u != g.s or v == g.t:
            continue
        fired = True
        if len(g.contract_edge(eid).nonsinks()) != len(g.nonsinks()) - 1:
            return _fail(f"contracting {eid} did not drop exactly one nonsink")
    return _PASS if fired else _SKIP


@_check("cycle-survives-delete-contract")
def _chk_cycle_survives(ctx: _Ctx):
    g = ctx.g
    if ctx.useless or g.find_cycle() is None:
        return _SKIP
    fired = False
    for eid, u, _ in g.edges:
        if u != g.s:
            continue
        fired = True
        if g.delete_edge(eid).find_cycle() is None:
            return _fail(f"deletion of {eid} lost all cycles")
        if g.contract_edge(eid).find_cycle() is None:
            return _fail(f"contraction of {eid} lost all cycles")
    return _PASS if fired else _SKIP


@_check("contract-stays-clean-when-delete-dirty")
def _chk_contract_clean(ctx: _Ctx):
    g = ctx.g
    if ctx.useless or g.find_cycle() is not None:
        return _SKIP
    fired = False
    for eid, u, _ in g.edges:
        if u != g.s or not g.delete_edge(eid).useless_edges():
            continue
        fired = True
        contracted = g.contract_edge(eid)
        if contracted.find_cycle() is not None or contracted.useless_edges():
            return _fail(f"contraction of {eid} is not clean")
    return _PASS if fired else _SKIP


@_check("contract-gains-cycle-when-delete-clean")
def _chk_contract_cycle(ctx: _Ctx):
    g = ctx.g
    if ctx.useless:
        return _SKIP
    fired = False
    for eid, u, v in g.edges:
        if u != g.s or v == g.t:
            continue
        deleted = g.delete_edge(eid)
        if deleted.useless_edges():
            continue
        fired = True
        if g.contract_edge(eid).find_cycle() is None:
            return _fail(f"contraction of {eid} gained no cycle")
        if deleted.nonsinks() != g.nonsinks():
            return _fail(f"deletion of {eid} changed the nonsinks")
    return _PASS if fired else _SKIP


@_check("fpoly-deletion-link-recursion")
def _chk_fpoly_rec(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        f = c.f_polynomial()
        for w in c.ground:
            split = c.deletion(w).f_polynomial() + c.link(w).f_polynomial().shift()
            if f != split:
                return _fail(f"{name}: f-polynomial recursion fails at {w}")
    return _PASS


@_check("fpoly-cone-factor")
def _chk_fpoly_cone(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    fired = False
    for name, c in ctx.both():
        for w in c.ground:
            if not c.is_cone_with_apex(w):
                continue
            fired = True
            lk = c.link(w)
            if c.deletion(w) != lk:
                return _fail(f"{name}: cone at {w} but deletion != link")
            if c.f_polynomial() != lk.f_polynomial() * IntPolynomial((1, 1)):
                return _fail(f"{name}: cone factorization fails at {w}")
    return _PASS if fired else _SKIP


@_check("fpoly-dual-coefficients")
def _chk_fpoly_dual(ctx: _Ctx):
    n = len(ctx.g.edges)
    if n == 0:
        return _SKIP
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        f = c.f_polynomial()
        fd = c.alexander_dual().f_polynomial()
        for k in range(n + 1):
            if fd[k] != comb(n, k) - f[n - k]:
                return _fail(f"{name}: dual coefficient {k} mismatch")
    return _PASS


@_check("chi-deletion-link-recursion")
def _chk_chi_rec(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        chi = c.reduced_euler_characteristic()
        for w in c.ground:
            if chi != (c.deletion(w).reduced_euler_characteristic()
                       - c.link(w).reduced_euler_characteristic()):
                return _fail(f"{name}: Euler recursion fails at {w}")
    return _PASS


@_check("chi-dual-sign")
def _chk_chi_dual(ctx: _Ctx):
    n = len(ctx.g.edges)
    if n == 0:
        return _SKIP
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        lhs = c.alexander_dual().reduced_euler_characteristic()
        rhs = (-1) ** (n - 1) * c.reduced_euler_characteristic()
        if lhs != rhs:
            return _fail(f"{name}: dual Euler characteristic sign is wrong")
    return _PASS


@_check("chi-boundary-sphere")
def _chk_chi_sphere(ctx: _Ctx):
    ids = ctx.g.edge_ids
    if not ids:
        return _SKIP
    c = proper_subsets_complex(ids)
    if c.reduced_euler_characteristic() != (-1) ** len(ids):
        return _fail("proper-subsets complex has the wrong Euler characteristic")
    return _PASS


@_check("chi-full-simplex")
def _chk_chi_simplex(ctx: _Ctx):
    ids = ctx.g.edge_ids
    if not ids:
        return _SKIP
    if full_simplex(ids).reduced_euler_characteristic() != 0:
        return _fail("full simplex has nonzero reduced Euler characteristic")
    return _PASS


@_check("chi-cone-vanishes")
def _chk_chi_cone(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    fired = False
    for name, c in ctx.both():
        if c.is_cone():
            fired = True
            if c.reduced_euler_characteristic() != 0:
                return _fail(f"{name}: cone with nonzero Euler characteristic")
    return _PASS if fired else _SKIP


@_check("useless-edge-cone")
def _chk_useless_cone(ctx: _Ctx):
    if not ctx.useless:
        return _SKIP
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        for e in sorted(ctx.useless):
            if not c.is_cone_with_apex(e):
                return _fail(f"{name} is not a cone at useless edge {e}")
    return _PASS


@_check("chi-pm-closed-form")
def _chk_chi_pm(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    report = chi_pm_closed(ctx.g)
    brute = ctx.pm.reduced_euler_characteristic()
    if report.value != brute:
        return _fail(f"closed form {report.value} != brute force {brute}")
    return _PASS


@_check("chi-pf-closed-form")
def _chk_chi_pf(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    report = chi_pf_closed(ctx.g)
    brute = ctx.pf.reduced_euler_characteristic()
    if report.value != brute:
        return _fail(f"closed form {report.value} != brute force {brute}")
    return _PASS


@_check("face-count-parity")
def _chk_parity(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for (name, c), report in zip(ctx.both(),
                                 (chi_pm_closed(ctx.g), chi_pf_closed(ctx.g))):
        want = "odd" if len(c.faces) % 2 else "even"
        if report.parity != want:
            return _fail(f"{name}: predicted parity {report.parity}, counted {want}")
    return _PASS


@_check("fpoly-quasicycle-divisibility")
def _chk_divisibility(ctx: _Ctx):
    try:
        report = check_divisibility(ctx.g, ctx.packing_limit)
    except ResourceLimitError as exc:
        return ("skip", str(exc))
    if not (report.pm_ok and report.pf_ok):
        return _fail(f"(1+x)^{report.kappa} does not divide both f-polynomials")
    return _PASS


@_check("dc-equals-enumeration")
def _chk_dc(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    g = ctx.g
    pm_dc, pf_dc = fpoly_pm_dc(g), fpoly_pf_dc(g)
    if pm_dc != ctx.pm.f_polynomial():
        return _fail("path-missing recursion differs from enumeration")
    if pf_dc != ctx.pf.f_polynomial():
        return _fail("path-free recursion differs from enumeration")
    if fpoly_pm_dc(g, use_cone_shortcut=True) != pm_dc:
        return _fail("cone shortcut changes the path-missing polynomial")
    if fpoly_pf_dc(g, use_cone_shortcut=True) != pf_dc:
        return _fail("cone shortcut changes the path-free polynomial")
    return _PASS


@_check("homology-matches-classification")
def _chk_homology(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for (name, c), cls in zip(ctx.both(),
                              (homotopy_pm(ctx.g), homotopy_pf(ctx.g))):
        betti = c.gf2_reduced_betti()
        if cls.kind == "empty":
            if not c.is_empty() or betti.entries:
                return _fail(f"{name}: predicted empty, got faces or homology")
        elif cls.kind == "contractible":
            if betti.entries:
                return _fail(f"{name}: contractible but homology {betti.entries}")
        else:
            if betti.entries != ((cls.dim, 1),):
                return _fail(f"{name}: expected a single class in dimension "
                             f"{cls.dim}, got {betti.entries}")
    return _PASS


@_check("chi-equals-betti-alternating-sum")
def _chk_euler_poincare(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        if c.reduced_euler_characteristic() != c.gf2_reduced_betti().alternating_sum():
            return _fail(f"{name}: Euler characteristic disagrees with homology")
    return _PASS


@_check("suspension-negates-chi")
def _chk_suspension(ctx: _Ctx):
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for name, c in ctx.both():
        if c.suspension().reduced_euler_characteristic() != -c.reduced_euler_characteristic():
            return _fail(f"{name}: suspension does not negate the Euler characteristic")
    return _PASS


@_check("strong-grape-certificates")
def _chk_strong_grape(ctx: _Ctx):
    if len(ctx.g.edges) > ctx.grape_limit or not ctx.can_enumerate():
        return ("skip", "ground size above grape search limit")
    for name, c in ctx.both():
        cert = is_strong_grape(c, ctx.grape_limit)
        if cert is None:
            return _fail(f"{name} is not recognized as a strong grape")
        if not replay_certificate(cert, c):
            return _fail(f"{name}: strong grape certificate does not replay")
    return _PASS


@_check("strong-implies-combinatorial")
def _chk_comb_grape(ctx: _Ctx):
    if len(ctx.g.edges) > ctx.grape_limit or not ctx.can_enumerate():
        return ("skip", "ground size above grape search limit")
    for name, c in ctx.both():
        cert = is_combinatorial_grape(c, ctx.grape_limit)
        if cert is None:
            return _fail(f"{name} is not recognized as a combinatorial grape")
        if not replay_certificate(cert, c):
            return _fail(f"{name}: combinatorial certificate does not replay")
    return _PASS


@_check("grape-apex-source-restriction")
def _chk_grape_apex(ctx: _Ctx):
    if len(ctx.g.edges) > ctx.grape_limit or not ctx.can_enumerate():
        return ("skip", "ground size above grape search limit")
    for which, c in (("pm", ctx.pm), ("pf", ctx.pf)):
        cert = source_apex_strong_certificate(ctx.g, which, ctx.grape_limit)
        if cert is None:
            return _fail(f"{which}: no certificate through source-s apexes")
        if not replay_certificate(cert, c):
            return _fail(f"{which}: source-apex certificate does not replay")
    return _PASS


@_check("maxflow-equals-mincut")
def _chk_menger(ctx: _Ctx):
    g = ctx.g
    if g.s == g.t:
        return _SKIP
    flow = g.max_edge_disjoint_st_paths()
    cut = g.min_st_cutset_size()
    if flow != cut:
        return _fail(f"max disjoint paths {flow} != min cut {cut}")
    return _PASS


@_check("parallel-rgen-chi")
def _chk_rgen(ctx: _Ctx):
    g = ctx.g
    k = len(g.edges)
    if g.s == g.t or k == 0 or any((u, v) != (g.s, g.t) for _, u, v in g.edges):
        return _SKIP
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    for r in range(1, k + 1):
        chi_pf = build_pf_r(g, r).reduced_euler_characteristic()
        chi_pm = build_pm_r(g, r).reduced_euler_characteristic()
        if chi_pf != (-1) ** r * comb(k - 1, r - 1):
            return _fail(f"path-free r={r} Euler characteristic {chi_pf}")
        if chi_pm != (-1) ** (k + r - 1) * comb(k - 1, r - 1):
            return _fail(f"path-missing r={r} Euler characteristic {chi_pm}")
    return _PASS


@_check("rgen-duality-probe")
def _chk_rgen_dual(ctx: _Ctx):
    # Observational only: whether the r = 2 complexes are Alexander duals.
    if not ctx.can_enumerate():
        return _ENUM_SKIP
    pf2 = build_pf_r(ctx.g, 2)
    pm2 = build_pm_r(ctx.g, 2)
    holds = pf2.alexander_dual() == pm2
    return ("info", "r=2 duality holds" if holds else "r=2 duality fails")


CHECK_MANIFEST = (
    "build-oracles-downward-closed",
    "pf-pm-alexander-dual",
    "dual-involution",
    "pf-minimal-nonfaces-are-paths",
    "pm-minimal-nonfaces-are-min-cuts",
    "facets-complement-dual-nonfaces",
    "pf-codimension-is-min-cut",
    "pm-codimension-is-shortest-path",
    "deletion-star-partition",
    "contraction-path-correspondence",
    "pm-link-deletion-match-graph-ops",
    "pf-link-deletion-match-graph-ops",
    "target-s-edges-useless",
    "contract-shared-target-makes-useless",
    "delete-sole-entry-makes-useless",
    "contract-drops-one-nonsink",
    "cycle-survives-delete-contract",
    "contract-stays-clean-when-delete-dirty",
    "contract-gains-cycle-when-delete-clean",
    "fpoly-deletion-link-recursion",
    "fpoly-cone-factor",
    "fpoly-dual-coefficients",
    "chi-deletion-link-recursion",
    "chi-dual-sign",
    "chi-boundary-sphere",
    "chi-full-simplex",
    "chi-cone-vanishes",
    "useless-edge-cone",
    "chi-pm-closed-form",
    "chi-pf-closed-form",
    "face-count-parity",
    "fpoly-quasicycle-divisibility",
    "dc-equals-enumeration",
    "homology-matches-classification",
    "chi-equals-betti-alternating-sum",
    "suspension-negates-chi",
    "strong-grape-certificates",
    "strong-implies-combinatorial",
    "grape-apex-source-restriction",
    "maxflow-equals-mincut",
    "parallel-rgen-chi",
    "rgen-duality-probe",
)


def _assert_registry_complete():
    registered = tuple(cid for cid, _ in _REGISTRY)
    if registered != CHECK_MANIFEST:
        missing = set(CHECK_MANIFEST) - set(registered)
        extra = set(registered) - set(CHECK_MANIFEST)
        raise AssertionError(
            f"check registry drifted from manifest: missing={sorted(missing)} "
            f"extra={sorted(extra)} (order matters)")


# -- graph-guided grape certificates ---------------------------------------------------


def source_apex_strong_certificate(g: Digraph, which: str,
                                   limit: int = GRAPE_GROUND_LIMIT) -> Optional[GrapeNode]:
    """Strong-grape certificate whose apex, whenever the graph offers a
    non-useless edge out of s, is the lowest-id such edge.

    The two children of the split correspond to the edge-deleted and
    edge-contracted graphs, so the recursion walks graphs rather than
    complexes.  Graphs with no such edge (s = t, or no s-t-path at all)
    fall back to the unrestricted search.
    """
    c = build_pm(g) if which == "pm" else build_pf(g)
    if len(c.ground) > limit:
        raise ResourceLimitError("ground size above grape search limit")
    if len(c.ground) <= 1:
        return BaseCase(c.ground)
    useless = g.useless_edges()
    candidates = [eid for eid, u, _ in sorted(g.edges)
                  if u == g.s and eid not in useless]
    if not candidates:
        return is_strong_grape(c, limit)
    e = candidates[0]
    side = find_cone_witness(c.link(e), c.deletion(e))
    if side is None:
        return None
    if which == "pm":
        link_graph, deletion_graph = g.delete_edge(e), g.contract_edge(e)
    else:
        link_graph, deletion_graph = g.contract_edge(e), g.delete_edge(e)
    link_child = source_apex_strong_certificate(link_graph, which, limit)
    deletion_child = source_apex_strong_certificate(deletion_graph, which, limit)
    if link_child is None or deletion_child is None:
        return None
    return Split(e, link_child, deletion_child, side)


# -- harness ---------------------------------------------------------------------------


@dataclass
class CheckOutcome:
    check_id: str
    status: str  # "pass" | "fail" | "skip" | "info"
    detail: str = ""


@dataclass
class GraphVerification:
    index: int
    graph: Digraph
    outcomes: list[CheckOutcome]

    def failures(self) -> list[CheckOutcome]:
        return [o for o in self.outcomes if o.status == "fail"]


@dataclass
class VerificationReport:
    graphs: list[GraphVerification] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0, "info": 0}
        for gv in self.graphs:
            for o in gv.outcomes:
                out[o.status] += 1
        return out

    def failures(self) -> list[tuple[int, Digraph, CheckOutcome]]:
        return [(gv.index, gv.graph, o)
                for gv in self.graphs for o in gv.failures()]

    def to_lines(self) -> list[str]:
        lines = [f"{gv.index} {o.check_id} {o.status}"
                 for gv in self.graphs for o in gv.outcomes]
        c = self.counts()
        lines.append(f"summary graphs={len(self.graphs)} pass={c['pass']} "
                     f"fail={c['fail']} skip={c['skip']} info={c['info']}")
        return lines

    def failure_payloads(self) -> list[str]:
        blocks = []
        for index, graph, outcome in self.failures():
            blocks.append(f"FAIL graph {index} check {outcome.check_id}: "
                          f"{outcome.detail}\n{format_graph(graph)}")
        return blocks


def run_all_checks(g: Digraph, enum_limit: int = DEFAULT_ENUM_LIMIT,
                   grape_limit: int = GRAPE_GROUND_LIMIT,
                   packing_limit: int = QUASI_CYCLE_PACKING_LIMIT) -> list[CheckOutcome]:
    """Execute the full registry against one graph.

    Check failures are outcomes, not exceptions; a resource guard firing
    inside a check demotes it to a skip with the guard's message.
    """
    _assert_registry_complete()
    ctx = _Ctx(g, enum_limit, grape_limit, packing_limit)
    outcomes = []
    for check_id, fn in _REGISTRY:
        try:
            status, detail = fn(ctx)
        except ResourceLimitError as exc:
            status, detail = "skip", str(exc)
        except Exception as exc:  # a crashing check is a failing check
            status, detail = "fail", f"check raised {exc!r}"
        outcomes.append(CheckOutcome(check_id, status, detail))
    return outcomes


def verify_corpus(spec: CorpusSpec, enum_limit: int = DEFAULT_ENUM_LIMIT,
                  grape_limit: int = GRAPE_GROUND_LIMIT,
                  packing_limit: int = QUASI_CYCLE_PACKING_LIMIT) -> VerificationReport:
    report = VerificationReport()
    for index, g in enumerate(generate_corpus(spec)):
        outcomes = run_all_checks(g, enum_limit, grape_limit, packing_limit)
        report.graphs.append(GraphVerification(index, g, outcomes))
    return report
