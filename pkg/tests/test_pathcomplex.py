import math

import pytest

from pathcomplexes.digraph import Digraph
from pathcomplexes.errors import ResourceLimitError
from pathcomplexes.pathcomplex import (CASE_EMPTY_EDGE, CASE_GENERIC_ACYCLIC,
                                       CASE_USELESS_OR_CYCLE, build_pf,
                                       build_pf_r, build_pm, build_pm_r,
                                       check_divisibility, chi_pf_closed,
                                       chi_pm_closed, fpoly_pf_dc, fpoly_pm_dc,
                                       homotopy_pf, homotopy_pm, pf_member,
                                       pf_r_member, pm_member, pm_r_member,
                                       sphere)
from pathcomplexes.polynomial import IntPolynomial
from pathcomplexes.simplicial import (empty_complex, irrelevant_complex,
                                      proper_subsets_complex)
from pathcomplexes.verify import (double_cycle_graph, edgeless_graph,
                                  example_graph, loop_graph, parallel_graph,
                                  path_graph)

EXAMPLE_PF_FACETS = ["abdfg", "abef", "acdfg", "acefg", "bcdg", "bcefg"]
EXAMPLE_PM_FACETS = ["abcfg", "aeg", "cdf", "defg"]


def facet_names(g, c):
    labels = g.label_map()
    return sorted("".join(sorted(labels[e] for e in f)) for f in c.facets())


def ids_for(g, letters):
    by_label = {lbl: eid for eid, lbl in g.label_map().items()}
    return frozenset(by_label[x] for x in letters)


# -- membership -----------------------------------------------------------------


def test_pm_member_on_example():
    g = example_graph()
    assert pm_member(g, ids_for(g, "defg"))
    assert not pm_member(g, ids_for(g, "ad"))  # both exits from s removed


def test_pf_member_on_example():
    g = example_graph()
    assert pf_member(g, ids_for(g, "bcefg"))
    assert not pf_member(g, ids_for(g, "de"))


def test_membership_when_s_equals_t():
    g = loop_graph()
    assert pm_member(g, frozenset({0}))
    assert not pf_member(g, frozenset())


def test_membership_validates_edge_ids():
    with pytest.raises(ValueError):
        pm_member(example_graph(), frozenset({42}))
    with pytest.raises(ValueError):
        pf_r_member(example_graph(), frozenset({42}), 1)


# -- construction ------------------------------------------------------------------


def test_example_facets():
    g = example_graph()
    assert facet_names(g, build_pf(g)) == EXAMPLE_PF_FACETS
    assert facet_names(g, build_pm(g)) == EXAMPLE_PM_FACETS


def test_edgeless_complexes():
    g = edgeless_graph()
    assert build_pf(g) == irrelevant_complex()
    assert build_pm(g) == empty_complex()


def test_build_guard():
    with pytest.raises(ResourceLimitError):
        build_pm(example_graph(), limit=3)


def test_r_one_reduces_to_plain_complexes():
    for g in (example_graph(), parallel_graph(3), loop_graph(), path_graph(2)):
        assert build_pm_r(g, 1) == build_pm(g)
        assert build_pf_r(g, 1) == build_pf(g)


# -- deletion-contraction f-polynomials -----------------------------------------------


def test_fpoly_parallel2():
    g = parallel_graph(2)
    assert fpoly_pm_dc(g) == IntPolynomial([1, 2])
    assert fpoly_pf_dc(g) == IntPolynomial([1])


def test_fpoly_edgeless():
    g = edgeless_graph()
    assert fpoly_pm_dc(g).is_zero()
    assert fpoly_pf_dc(g) == IntPolynomial([1])


def test_fpoly_s_equals_t_bases():
    g = loop_graph()
    assert fpoly_pm_dc(g) == IntPolynomial([1, 1])
    assert fpoly_pf_dc(g).is_zero()


def test_fpoly_matches_enumeration_on_example():
    g = example_graph()
    assert fpoly_pm_dc(g) == build_pm(g).f_polynomial()
    assert fpoly_pf_dc(g) == build_pf(g).f_polynomial()


def test_cone_shortcut_changes_nothing():
    for g in (example_graph(), example_graph().delete_edge(3),
              double_cycle_graph(), loop_graph()):
        assert fpoly_pm_dc(g, use_cone_shortcut=True) == fpoly_pm_dc(g)
        assert fpoly_pf_dc(g, use_cone_shortcut=True) == fpoly_pf_dc(g)


# -- closed-form Euler characteristics ---------------------------------------------------


def test_chi_example_is_zero_with_cycle_tag():
    for report in (chi_pm_closed(example_graph()), chi_pf_closed(example_graph())):
        assert report.value == 0
        assert report.case_tag == CASE_USELESS_OR_CYCLE
        assert report.parity == "even"


def test_chi_parallel_battery():
    for k in range(1, 7):
        report = chi_pm_closed(parallel_graph(k))
        assert report.value == (-1) ** k
        assert report.case_tag == CASE_GENERIC_ACYCLIC
        assert report.parity == "odd"


def test_chi_path2():
    assert chi_pm_closed(path_graph(2)).value == -1
    assert chi_pf_closed(path_graph(2)).value == 1


def test_chi_edgeless():
    pm = chi_pm_closed(edgeless_graph())
    assert (pm.value, pm.case_tag) == (0, CASE_EMPTY_EDGE)
    pf = chi_pf_closed(edgeless_graph())
    assert (pf.value, pf.case_tag, pf.parity) == (-1, CASE_EMPTY_EDGE, "odd")


def test_chi_isolated_s_equals_t():
    g = Digraph.build(["s"], [], "s", "s")
    assert chi_pm_closed(g).value == -1  # the complex is {∅}
    assert chi_pf_closed(g).value == 0


def test_chi_closed_matches_brute_force_on_samples():
    for g in (example_graph(), parallel_graph(3), path_graph(4), loop_graph(),
              double_cycle_graph(), edgeless_graph(), example_graph().delete_edge(3)):
        assert chi_pm_closed(g).value == build_pm(g).reduced_euler_characteristic()
        assert chi_pf_closed(g).value == build_pf(g).reduced_euler_characteristic()


# -- homotopy classification --------------------------------------------------------------


def test_homotopy_example_contractible():
    assert homotopy_pm(example_graph()).kind == "contractible"
    assert homotopy_pf(example_graph()).kind == "contractible"


def test_homotopy_path2():
    assert homotopy_pm(path_graph(2)) == sphere(-1)
    assert build_pm(path_graph(2)) == irrelevant_complex((0, 1))
    assert homotopy_pf(path_graph(2)) == sphere(0)
    assert len(build_pf(path_graph(2)).faces) == 3


def test_homotopy_empty_cases():
    assert homotopy_pm(edgeless_graph()).kind == "empty"
    assert homotopy_pf(loop_graph()).kind == "empty"
    assert homotopy_pf(edgeless_graph()) == sphere(-1)


def test_homotopy_parallel_is_sphere():
    for k in range(1, 7):
        assert homotopy_pm(parallel_graph(k)) == sphere(k - 2)
        assert build_pm(parallel_graph(k)) == proper_subsets_complex(range(k))


# -- divisibility -----------------------------------------------------------------------------


def test_divisibility_example():
    report = check_divisibility(example_graph())
    assert report.kappa == 1 and report.pm_ok and report.pf_ok


def test_divisibility_double_cycle():
    report = check_divisibility(double_cycle_graph())
    assert report.kappa == 2 and report.pm_ok and report.pf_ok


def test_divisibility_trivial_on_clean_dag():
    report = check_divisibility(path_graph(3))
    assert report.kappa == 0 and report.pm_ok and report.pf_ok


def test_divisibility_remainders_have_low_degree():
    report = check_divisibility(example_graph())
    assert report.pm_remainder.degree <= report.kappa
    assert report.pf_remainder.degree <= report.kappa


# -- r-generalization ---------------------------------------------------------------------------


def test_r_membership_on_triple_bundle():
    g = parallel_graph(3)
    assert pm_r_member(g, frozenset({0}), 2)
    assert not pm_r_member(g, frozenset({0, 1}), 2)
    assert pf_r_member(g, frozenset({0}), 2)
    assert not pf_r_member(g, frozenset({0, 1}), 1)


def test_r_membership_requires_positive_r():
    with pytest.raises(ValueError):
        pm_r_member(parallel_graph(2), frozenset(), 0)


def test_r_membership_when_s_equals_t():
    g = loop_graph()
    assert pm_r_member(g, frozenset({0}), 5)
    assert not pf_r_member(g, frozenset(), 5)


def test_rgen_euler_characteristics():
    for k in range(1, 7):
        g = parallel_graph(k)
        for r in range(1, k + 1):
            chi_pf = build_pf_r(g, r).reduced_euler_characteristic()
            chi_pm = build_pm_r(g, r).reduced_euler_characteristic()
            assert chi_pf == (-1) ** r * math.comb(k - 1, r - 1)
            assert chi_pm == (-1) ** (k + r - 1) * math.comb(k - 1, r - 1)


def test_rgen_complexes_are_downward_closed():
    g = example_graph()
    for r in (2, 3):
        build_pm_r(g, r).validate()
        build_pf_r(g, r).validate()
