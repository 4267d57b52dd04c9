"""Census enumerators against the closed formulas and hand-checked anchors."""
import json

import pytest

from sheaf_census import census as cs
from sheaf_census import diagrams as dg
from sheaf_census.partitions import count_bipartitions, count_partitions


def test_hecke_counts():
    assert [cs.hecke_count("A", n) for n in range(6)] == [1, 1, 1, 2, 2, 3]
    assert cs.hecke_count("B", 2) == 2
    assert [cs.hecke_count("B", n) for n in range(5)] == [1, 1, 2, 3, 4]
    assert cs.hecke_count("D", 0) == 1
    assert [cs.hecke_count("D", n) for n in range(6)] == [1, 1, 1, 2, 3, 4]
    assert cs.hecke_count("B11", 6) == count_partitions(6)
    with pytest.raises(ValueError):
        cs.hecke_count("E", 3)


def test_theta_k0_examples():
    assert cs.theta_k0_count("ind1-B", 2) == 5
    assert cs.theta_k0_count("split-B", 0) == 1
    assert cs.theta_k0_count("split-B", 2) == 4
    # the class-2 induced family coincides with the split family on the B side
    for n in range(12):
        assert cs.theta_k0_count("ind2-B", n) == cs.theta_k0_count("split-B", n)
    assert cs.theta_k0_count("split-D", 2) == 5
    assert cs.theta_k0_count("ind2-D", 2) == 7
    assert cs.theta_k0_count("ind1-D", 1) == 4


def test_theta_k1_examples():
    assert cs.theta_k1_count(3, 1) == 4
    assert cs.theta_k1_count(2, 1) == 2
    assert cs.theta_k1_count(0, 2) == 1
    assert cs.theta_k1_count(0, 4) == 4
    assert cs.theta_k1_count(1, 2) == 4


def test_census_anchor_values():
    assert cs.census_bdi_k0(3, 2).total == 11
    assert cs.census_bdi_k1(3, 2).total == 6
    assert cs.count_formula_k0(3, 2) == 11
    assert cs.count_formula_k1(3, 2) == 6
    assert cs.census_bdi_k0(2, 3).total == 11  # sign-swap symmetry
    assert cs.census_bdi_k1(4, 1).total == 0
    assert cs.census_bdi_k1(6, 2).total == 0


def test_census_k1_strata_structure():
    report = cs.census_bdi_k1(3, 2)
    by_mk = {}
    for e in report.entries:
        by_mk.setdefault((e.m, e.k), 0)
        by_mk[e.m, e.k] += e.count
    assert by_mk == {(2, 0): 2, (0, 1): 4}


def test_census_low_rank_warning():
    assert cs.census_bdi_k0(2, 1).warnings
    assert not cs.census_bdi_k0(3, 2).warnings


def test_two_path_small_sweep():
    for total in range(15):
        for p in range(total + 1):
            q = total - p
            assert cs.census_bdi_k0(p, q).total == cs.count_formula_k0(p, q), (p, q)
            assert cs.census_bdi_k1(p, q).total == cs.count_formula_k1(p, q), (p, q)


def test_third_paths_small_sweep():
    for total in range(13):
        for p in range(total + 1):
            q = total - p
            assert cs.kappa0_orbit_sum(p, q) == cs.count_formula_k0(p, q)
            assert cs.kappa1_orbit_sum(p, q) == cs.count_formula_k1(p, q)


def test_formula_orientation_swap():
    assert cs.count_formula_k0(2, 5) == cs.count_formula_k0(5, 2)
    assert cs.count_formula_k1(2, 5) == cs.count_formula_k1(5, 2)


def test_census_diii():
    k0, k1 = cs.census_diii(3)
    assert (k0.total, k1.total) == (4, 0)
    k0, k1 = cs.census_diii(4)
    assert k1.total == count_bipartitions(2) == 5
    for n in range(13):
        k0, _ = cs.census_diii(n)
        assert k0.total == cs.diii_closure_total(n)
        assert k0.total == sum(count_partitions(k)
                               * (len(dg.enum_lambda_b(n - 2 * k)) if n - 2 * k else 1)
                               for k in range(n // 2 + 1))


def test_cuspidal_counts():
    assert cs.cuspidal_counts(3, 2)[0] == 4
    assert cs.cuspidal_counts(4, 2) == (0, 4)
    assert cs.cuspidal_counts(6, 1)[1] == 0
    assert cs.cuspidal_counts(2, 2)[0] == cs.theta_k0_count("split-D", 2) == 5
    # cuspidal sheaves are a subset of the census on every pair
    for total in range(12):
        for p in range(total + 1):
            q = total - p
            c0, c1 = cs.cuspidal_counts(p, q)
            assert c0 <= cs.census_bdi_k0(p, q).total
            assert c1 <= cs.census_bdi_k1(p, q).total


def test_nilpotent_counts():
    assert cs.nilpotent_support_counts(3, 2)[0] == 4
    # the staircase pair for t=2 carries eta(0,2) = 1 nontrivial sheaf; the
    # same value comes out of the census and the closed formula
    assert cs.nilpotent_support_counts(3, 1)[1] == 1
    assert cs.census_bdi_k1(3, 1).total == cs.count_formula_k1(3, 1) == 1
    assert cs.nilpotent_support_counts(6, 2)[1] == 0
    # both orbits over each class-2 diagram carry their characters
    assert cs.nilpotent_support_counts(1, 0)[0] == 2


def test_full_support_counts():
    assert cs.full_support_counts(3, 2)[0] == cs.cuspidal_counts(3, 2)[0]
    assert cs.full_support_counts(4, 2) == (0, 0)
    assert cs.full_support_counts(3, 3)[1] == cs.theta_k1_count(3, 0)


def test_aggregate_T():
    for N in (5, 6, 7):
        t0, tprime = cs.aggregate_T(N)
        assert t0 == tprime


def test_report_json_shape():
    report = cs.census_bdi_k0(3, 2)
    data = report.to_json_dict()
    assert data["pair"] == {"type": "bdi", "p": 3, "q": 2}
    assert data["central"] == "k0"
    assert data["total"] == 11
    assert sum(s["count"] for s in data["strata"]) == 11
    for s in data["strata"]:
        parsed = dg.parse_diagram(s["support"])
        assert dg.format_diagram(parsed) == s["support"]
    json.dumps(data)  # serializable


def test_stratum_delta_structure():
    report = cs.census_bdi_k0(3, 2)
    for e in report.entries:
        mult = dg.orbit_multiplicity(e.support.diagram)
        assert (e.support.delta is not None) == (mult > 1)
    deltas = [e.support.delta for e in report.entries if e.m == 0 and e.k == 0]
    assert deltas == ["I", "II", "I", "II"]


def test_support_join_invariant():
    for report in (cs.census_bdi_k0(4, 3), cs.census_bdi_k1(5, 1)):
        for e in report.entries:
            rebuilt = dg.join(dg.diagram((1, e.m, e.m), (2, e.k, e.k))
                              if e.m or e.k else dg.SignedYoungDiagram(), e.mu)
            assert rebuilt == e.support.diagram


def test_subset_report_totals():
    for p, q in ((3, 2), (4, 2), (3, 3), (4, 4), (5, 2), (2, 2)):
        for central, make in (("k0", cs.census_bdi_k0), ("k1", cs.census_bdi_k1)):
            report = make(p, q)
            for subset in cs.SUBSETS:
                filtered = cs.subset_report(report, subset)
                assert filtered.total == cs.expected_subset_total(report, subset), \
                    (p, q, central, subset)


def test_subset_report_diii():
    k0, k1 = cs.census_diii(6)
    assert cs.subset_report(k0, "nilpotent").total == len(dg.enum_lambda_b(6))
    assert cs.subset_report(k0, "full").total == count_partitions(3)
    assert cs.subset_report(k0, "cuspidal").total == 0
    assert cs.subset_report(k1, "full").total == k1.total
    assert cs.subset_report(k1, "nilpotent").total == 0


def test_orbit_label_validation():
    with pytest.raises(ValueError):
        cs.OrbitLabel(dg.parse_diagram("1+^3 1-^2"), "I")  # single orbit
    with pytest.raises(ValueError):
        cs.OrbitLabel(dg.parse_diagram("5+"), "III")  # only two orbits
    cs.OrbitLabel(dg.parse_diagram("5+"), "II")
