"""The two complexes a digraph carries on its edge set.

For a graph with distinguished vertices s and t:

* the path-free complex holds the edge subsets containing no s-t-path;
* the path-missing complex holds the subsets whose removal still leaves
  an s-t-path.

Both are built here explicitly, together with the deletion-contraction
recursion for their f-polynomials, closed forms for their reduced Euler
characteristics, sphere/contractible classification, divisibility of the
f-polynomials by powers of (1+x), and the r-edge-disjoint generalization
decided by unit-capacity flow.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .digraph import Digraph, QUASI_CYCLE_PACKING_LIMIT
from .errors import ResourceLimitError
from .polynomial import IntPolynomial, poly_divisibility
from .simplicial import SimplicialComplex

BUILD_EDGE_LIMIT = 20

CASE_USELESS_OR_CYCLE = "useless-or-cycle"
CASE_EMPTY_EDGE = "empty-edge-case"
CASE_GENERIC_ACYCLIC = "generic-acyclic"


@dataclass(frozen=True)
class ChiReport:
    """Closed-form reduced Euler characteristic with its case and parity."""

    value: int
    case_tag: str
    parity: str  # "even" | "odd"; matches the face-count parity


@dataclass(frozen=True)
class HomotopyClass:
    """Empty complex, contractible, or a sphere of the given dimension."""

    kind: str  # "empty" | "contractible" | "sphere"
    dim: Optional[int] = None

    def describe(self) -> str:
        if self.kind == "sphere":
            return f"sphere {self.dim}"
        return self.kind


EMPTY_COMPLEX = HomotopyClass("empty")
CONTRACTIBLE = HomotopyClass("contractible")


def sphere(dim: int) -> HomotopyClass:
    return HomotopyClass("sphere", dim)


@dataclass(frozen=True)
class DivisibilityReport:
    """Divisibility of both f-polynomials by (1+x)^kappa.

    kappa is the exact disjoint quasi-cycle packing number; the remainders
    are taken modulo (1+x)^(kappa+1) and carry no claim, they are emitted
    for inspection.
    """

    kappa: int
    pm_ok: bool
    pf_ok: bool
    pm_remainder: IntPolynomial
    pf_remainder: IntPolynomial


# -- membership oracles ------------------------------------------------------


def _check_subset(g: Digraph, f: frozenset) -> frozenset[int]:
    f = frozenset(f)
    unknown = f - set(g.edge_ids)
    if unknown:
        raise ValueError(f"not edge ids of the graph: {sorted(unknown)}")
    return f


def pm_member(g: Digraph, f) -> bool:
    """True iff removing f still leaves an s-t-path."""
    f = _check_subset(g, f)
    return g.has_st_path_within(frozenset(g.edge_ids) - f)


def pf_member(g: Digraph, f) -> bool:
    """True iff f contains no s-t-path."""
    f = _check_subset(g, f)
    return not g.has_st_path_within(f)


def pm_r_member(g: Digraph, f, r: int) -> bool:
    """True iff the complement of f contains r edge-disjoint s-t-paths."""
    if r < 1:
        raise ValueError("r must be positive")
    f = _check_subset(g, f)
    rest = g.subgraph(frozenset(g.edge_ids) - f)
    return rest.max_edge_disjoint_st_paths() >= r


def pf_r_member(g: Digraph, f, r: int) -> bool:
    """True iff f contains no r edge-disjoint s-t-paths."""
    if r < 1:
        raise ValueError("r must be positive")
    f = _check_subset(g, f)
    return g.subgraph(f).max_edge_disjoint_st_paths() < r


# -- explicit construction ------------------------------------------------------


def _build(g: Digraph, oracle: Callable[[frozenset], bool], limit: int) -> SimplicialComplex:
    m = len(g.edges)
    if m > limit:
        raise ResourceLimitError(f"{m} edges exceed the enumeration limit of {limit}")
    ids = g.edge_ids
    faces = []
    for k in range(m + 1):
        for combo in combinations(ids, k):
            f = frozenset(combo)
            if oracle(f):
                faces.append(f)
    c = SimplicialComplex(tuple(ids), frozenset(faces))
    c.validate()
    return c


def build_pm(g: Digraph, limit: int = BUILD_EDGE_LIMIT) -> SimplicialComplex:
    """Enumerate the path-missing complex; downward closure is asserted."""
    return _build(g, lambda f: pm_member(g, f), limit)


def build_pf(g: Digraph, limit: int = BUILD_EDGE_LIMIT) -> SimplicialComplex:
    """Enumerate the path-free complex; downward closure is asserted."""
    return _build(g, lambda f: pf_member(g, f), limit)


def build_pm_r(g: Digraph, r: int, limit: int = BUILD_EDGE_LIMIT) -> SimplicialComplex:
    return _build(g, lambda f: pm_r_member(g, f, r), limit)


def build_pf_r(g: Digraph, r: int, limit: int = BUILD_EDGE_LIMIT) -> SimplicialComplex:
    return _build(g, lambda f: pf_r_member(g, f, r), limit)


# -- deletion-contraction f-polynomials --------------------------------------------


def _dc_pivot(g: Digraph) -> int:
    """Lowest-id edge with source s; exists whenever s != t and a path does."""
    for eid, u, _ in sorted(g.edges):
        if u == g.s:
            return eid
    raise AssertionError("no pivot edge: recursion base cases were missed")


def fpoly_pm_dc(g: Digraph, use_cone_shortcut: bool = False) -> IntPolynomial:
    """f-polynomial of the path-missing complex, no subset enumeration.

    Base cases: s = t gives the full simplex (1+x)^|E|; no s-t-path gives
    the empty complex, i.e. 0.  Otherwise split on a pivot edge e with
    source s: deleting e inside a face corresponds to the graph minus e,
    keeping it corresponds to the contraction, so

        f(G) = f(G/e) + x * f(G \\ e).

    With ``use_cone_shortcut`` a useless edge e is peeled off first via the
    cone factorization f(G) = (1+x) * f(G \\ e); results are identical.
    """
    if g.s == g.t:
        return IntPolynomial.one_plus_x_power(len(g.edges))
    if not g.has_st_path():
        return IntPolynomial()
    if use_cone_shortcut:
        useless = g.useless_edges()
        if useless:
            smaller = fpoly_pm_dc(g.delete_edge(min(useless)), True)
            return smaller * IntPolynomial((1, 1))
    e = _dc_pivot(g)
    contracted = fpoly_pm_dc(g.contract_edge(e), use_cone_shortcut)
    deleted = fpoly_pm_dc(g.delete_edge(e), use_cone_shortcut)
    return contracted + deleted.shift()


def fpoly_pf_dc(g: Digraph, use_cone_shortcut: bool = False) -> IntPolynomial:
    """f-polynomial of the path-free complex by the mirrored recursion:

        f(G) = f(G \\ e) + x * f(G/e)

    for a pivot edge e with source s; s = t gives 0 and a pathless graph
    gives the full simplex (1+x)^|E|.
    """
    if g.s == g.t:
        return IntPolynomial()
    if not g.has_st_path():
        return IntPolynomial.one_plus_x_power(len(g.edges))
    if use_cone_shortcut:
        useless = g.useless_edges()
        if useless:
            smaller = fpoly_pf_dc(g.delete_edge(min(useless)), True)
            return smaller * IntPolynomial((1, 1))
    e = _dc_pivot(g)
    deleted = fpoly_pf_dc(g.delete_edge(e), use_cone_shortcut)
    contracted = fpoly_pf_dc(g.contract_edge(e), use_cone_shortcut)
    return deleted + contracted.shift()


# -- closed-form Euler characteristics ------------------------------------------------


def _parity(value: int) -> str:
    return "odd" if value % 2 else "even"


def chi_pm_closed(g: Digraph) -> ChiReport:
    """Reduced Euler characteristic of the path-missing complex.

    Zero as soon as the graph has a cycle or a useless edge, and for the
    edgeless graph with s != t; otherwise (-1)^(|E| - |V'| + 1) where V'
    is the set of nonsinks.  The cycle test runs first so that the
    acyclic shortcut may decide uselessness.
    """
    if g.find_cycle() is not None or g.useless_edges():
        return ChiReport(0, CASE_USELESS_OR_CYCLE, "even")
    if not g.edges and g.s != g.t:
        return ChiReport(0, CASE_EMPTY_EDGE, "even")
    value = (-1) ** (len(g.edges) - len(g.nonsinks()) + 1)
    return ChiReport(value, CASE_GENERIC_ACYCLIC, _parity(value))


def chi_pf_closed(g: Digraph) -> ChiReport:
    """Reduced Euler characteristic of the path-free complex.

    The edgeless graph is its own case: -1 when s != t (only the empty
    face) and 0 when s = t (no faces).  With edges present the value is 0
    under a cycle or useless edge and (-1)^|V'| otherwise.
    """
    if not g.edges:
        value = -1 if g.s != g.t else 0
        return ChiReport(value, CASE_EMPTY_EDGE, _parity(value))
    if g.find_cycle() is not None or g.useless_edges():
        return ChiReport(0, CASE_USELESS_OR_CYCLE, "even")
    value = (-1) ** len(g.nonsinks())
    return ChiReport(value, CASE_GENERIC_ACYCLIC, _parity(value))


# -- homotopy classification ---------------------------------------------------------


def homotopy_pm(g: Digraph) -> HomotopyClass:
    """Empty when no s-t-path exists; contractible under a useless edge or
    cycle; otherwise a sphere of dimension |E| - |V'| - 1."""
    if not g.has_st_path():
        return EMPTY_COMPLEX
    if g.find_cycle() is not None or g.useless_edges():
        return CONTRACTIBLE
    return sphere(len(g.edges) - len(g.nonsinks()) - 1)


def homotopy_pf(g: Digraph) -> HomotopyClass:
    """Empty when s = t; the (-1)-sphere {∅} when edgeless with s != t;
    contractible under a useless edge or cycle; otherwise a sphere of
    dimension |V'| - 2."""
    if g.s == g.t:
        return EMPTY_COMPLEX
    if not g.edges:
        return sphere(-1)
    if g.find_cycle() is not None or g.useless_edges():
        return CONTRACTIBLE
    return sphere(len(g.nonsinks()) - 2)


# -- divisibility ---------------------------------------------------------------------


def check_divisibility(g: Digraph,
                       packing_limit: int = QUASI_CYCLE_PACKING_LIMIT) -> DivisibilityReport:
    """Check that (1+x)^kappa divides both f-polynomials, kappa the exact
    disjoint quasi-cycle packing number, and report remainders modulo
    (1+x)^(kappa+1)."""
    kappa, _ = g.max_disjoint_quasi_cycles(packing_limit)
    f_pm = fpoly_pm_dc(g)
    f_pf = fpoly_pf_dc(g)
    pm_ok, _ = poly_divisibility(f_pm, kappa)
    pf_ok, _ = poly_divisibility(f_pf, kappa)
    modulus = IntPolynomial.one_plus_x_power(kappa + 1)
    _, pm_rem = f_pm.divmod_monic(modulus)
    _, pf_rem = f_pf.divmod_monic(modulus)
    return DivisibilityReport(kappa, pm_ok, pf_ok, pm_rem, pf_rem)
