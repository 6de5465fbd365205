"""Recursive recognition of strong and combinatorial grapes.

Both classes are defined by peeling one ground element a at a time: the
link and the deletion at a must again be grapes, plus a side condition.
For strong grapes at least one of link/deletion must be a cone; for
combinatorial grapes some cone must sit between them.  Recognition
returns an explicit certificate tree that can be replayed step by step
against the complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import ResourceLimitError
from .simplicial import SimplicialComplex

GRAPE_GROUND_LIMIT = 12


@dataclass(frozen=True)
class BaseCase:
    """Ground set of size at most one; a grape unconditionally."""

    ground: tuple[int, ...]


@dataclass(frozen=True)
class ConeWitness:
    """Which of the two children is a cone, and a working apex for it."""

    side: str  # "link" | "deletion"
    apex: int


@dataclass(frozen=True)
class SandwichWitness:
    """Element b with F ∪ {b} in the deletion for every link face F.

    Adding b to every link face builds a cone with apex b that sits
    between the link and the deletion, and conversely the apex of any
    such cone passes this test, so the finite test is exact.  ``vacuous``
    marks the degenerate pass where the link has no faces at all.
    """

    element: int
    vacuous: bool = False


@dataclass(frozen=True)
class Split:
    apex: int
    link_child: "GrapeNode"
    deletion_child: "GrapeNode"
    side_condition: Union[ConeWitness, SandwichWitness]


GrapeNode = Union[BaseCase, Split]
GrapeCertificate = GrapeNode


def _check_ground(c: SimplicialComplex, limit: int):
    if len(c.ground) > limit:
        raise ResourceLimitError(
            f"ground size {len(c.ground)} exceeds the grape search limit of {limit}")


def find_cone_witness(link: SimplicialComplex,
                      deletion: SimplicialComplex) -> Optional[ConeWitness]:
    """First cone apex found on either child, link side preferred."""
    for w in link.ground:
        if link.is_cone_with_apex(w):
            return ConeWitness("link", w)
    for w in deletion.ground:
        if deletion.is_cone_with_apex(w):
            return ConeWitness("deletion", w)
    return None


def _sandwich_witness(link: SimplicialComplex,
                      deletion: SimplicialComplex) -> Optional[SandwichWitness]:
    for b in deletion.ground:
        if all(f | {b} in deletion.faces for f in link.faces):
            return SandwichWitness(b, vacuous=not link.faces)
    return None


def _search(c: SimplicialComplex, side_test, memo) -> Optional[GrapeNode]:
    key = (c.ground, c.faces)
    if key in memo:
        return memo[key]
    node: Optional[GrapeNode] = None
    if len(c.ground) <= 1:
        node = BaseCase(c.ground)
    else:
        for a in c.ground:
            link = c.link(a)
            deletion = c.deletion(a)
            side = side_test(link, deletion)
            if side is None:
                continue
            link_child = _search(link, side_test, memo)
            if link_child is None:
                continue
            deletion_child = _search(deletion, side_test, memo)
            if deletion_child is None:
                continue
            node = Split(a, link_child, deletion_child, side)
            break
    memo[key] = node
    return node


def is_strong_grape(c: SimplicialComplex,
                    limit: int = GRAPE_GROUND_LIMIT) -> Optional[GrapeCertificate]:
    """Certificate that c is a strong grape, or None after exhaustive search.

    Apexes are tried in ground order; results are memoized on the
    (ground, faces) pair for the duration of one call.
    """
    _check_ground(c, limit)
    return _search(c, find_cone_witness, {})


def is_combinatorial_grape(c: SimplicialComplex,
                           limit: int = GRAPE_GROUND_LIMIT) -> Optional[GrapeCertificate]:
    """Certificate that c is a combinatorial grape, or None."""
    _check_ground(c, limit)
    return _search(c, _sandwich_witness, {})


def replay_certificate(cert: GrapeNode, c: SimplicialComplex) -> bool:
    """Re-verify every step of a certificate against the complex."""
    if isinstance(cert, BaseCase):
        return cert.ground == c.ground and len(c.ground) <= 1
    if not isinstance(cert, Split):
        return False
    if cert.apex not in c.ground:
        return False
    link = c.link(cert.apex)
    deletion = c.deletion(cert.apex)
    side = cert.side_condition
    if isinstance(side, ConeWitness):
        child = link if side.side == "link" else deletion
        if side.apex not in child.ground or not child.is_cone_with_apex(side.apex):
            return False
    elif isinstance(side, SandwichWitness):
        if side.element not in deletion.ground:
            return False
        if not all(f | {side.element} in deletion.faces for f in link.faces):
            return False
        if side.vacuous != (not link.faces):
            return False
    else:
        return False
    return (replay_certificate(cert.link_child, link)
            and replay_certificate(cert.deletion_child, deletion))
