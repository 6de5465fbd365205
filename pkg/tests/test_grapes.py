from itertools import combinations

import pytest

from pathcomplexes.errors import ResourceLimitError
from pathcomplexes.grapes import (BaseCase, ConeWitness, SandwichWitness,
                                  Split, is_combinatorial_grape,
                                  is_strong_grape, replay_certificate)
from pathcomplexes.pathcomplex import build_pf, build_pm
from pathcomplexes.simplicial import (SimplicialComplex, empty_complex,
                                      full_simplex, irrelevant_complex)
from pathcomplexes.verify import (double_cycle_graph, example_graph,
                                  fixture_battery, source_apex_strong_certificate)


def projective_plane():
    """Six-vertex triangulation of the real projective plane."""
    triangles = [(1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
                 (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6)]
    faces = set()
    for tri in triangles:
        for k in range(4):
            faces.update(frozenset(c) for c in combinations(tri, k + 1))
    faces.add(frozenset())
    return SimplicialComplex.from_faces(range(1, 7), faces)


def test_tiny_ground_is_always_a_grape():
    for c in (empty_complex(), irrelevant_complex(), empty_complex((7,)),
              irrelevant_complex((7,)), full_simplex((7,))):
        cert = is_strong_grape(c)
        assert isinstance(cert, BaseCase)
        assert replay_certificate(cert, c)
        assert is_combinatorial_grape(c) is not None


def test_full_simplex_is_a_grape_both_ways():
    c = full_simplex((1, 2, 3))
    for recognize in (is_strong_grape, is_combinatorial_grape):
        cert = recognize(c)
        assert cert is not None and replay_certificate(cert, c)


def test_degenerate_families_on_larger_ground():
    # Neither ∅ nor {∅} hits the base clause on ground size 2; the split
    # clause must carry them.
    for c in (empty_complex((1, 2)), irrelevant_complex((1, 2))):
        cert = is_strong_grape(c)
        assert isinstance(cert, Split)
        assert replay_certificate(cert, c)


def test_sandwich_witness_flags_vacuous_pass():
    cert = is_combinatorial_grape(irrelevant_complex((1, 2)))
    assert isinstance(cert, Split)
    assert isinstance(cert.side_condition, SandwichWitness)
    assert cert.side_condition.vacuous


def test_example_complexes_are_strong_grapes():
    g = example_graph()
    for c in (build_pm(g), build_pf(g)):
        cert = is_strong_grape(c)
        assert cert is not None and replay_certificate(cert, c)


def test_strong_implies_combinatorial_on_fixtures():
    for g in fixture_battery():
        for c in (build_pm(g), build_pf(g)):
            if is_strong_grape(c) is not None:
                comb_cert = is_combinatorial_grape(c)
                assert comb_cert is not None and replay_certificate(comb_cert, c)


def test_projective_plane_is_not_a_grape():
    c = projective_plane()
    # Sanity: this is the right complex (one GF(2) class each in dims 1, 2).
    assert c.gf2_reduced_betti().entries == ((1, 1), (2, 1))
    assert is_strong_grape(c) is None
    assert is_combinatorial_grape(c) is None


def test_replay_rejects_mismatched_certificates():
    g = example_graph()
    pm = build_pm(g)
    cert = is_strong_grape(pm)
    assert isinstance(cert, Split)
    # Wrong base case
    assert not replay_certificate(BaseCase((1, 2)), pm)
    # Apex outside the ground set
    broken = Split(99, cert.link_child, cert.deletion_child, cert.side_condition)
    assert not replay_certificate(broken, pm)
    # Forged cone witness
    forged = Split(cert.apex, cert.link_child, cert.deletion_child,
                   ConeWitness("link", 99))
    assert not replay_certificate(forged, pm)


def test_ground_limit_guard():
    with pytest.raises(ResourceLimitError):
        is_strong_grape(irrelevant_complex(range(13)))
    with pytest.raises(ResourceLimitError):
        is_combinatorial_grape(irrelevant_complex(range(13)))


def test_source_apex_restricted_search_succeeds():
    for g in (example_graph(), double_cycle_graph()):
        for which, c in (("pm", build_pm(g)), ("pf", build_pf(g))):
            cert = source_apex_strong_certificate(g, which)
            assert cert is not None and replay_certificate(cert, c)
            # The top-level apex is the promised non-useless source edge.
            useless = g.useless_edges()
            wanted = min(eid for eid, u, _ in g.edges
                         if u == g.s and eid not in useless)
            assert isinstance(cert, Split) and cert.apex == wanted
