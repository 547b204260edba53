import json

import pytest

enumera = pytest.importorskip("enumera")


def test_severi_degrees():
    assert enumera.severi_degree(4, 1) == 36
    assert enumera.severi_degree(4, 2) == 480
    assert enumera.severi_degree(4, 3) == 3200
    with pytest.raises(ValueError):
        enumera.severi_degree(4, 5)


def test_formula_values():
    assert enumera.dejonquieres(8, 0, 3) == 80
    assert enumera.dejonquieres(6, 4, 1) == 18
    assert enumera.dual_surface_degree(4, 16, 0) == 4
    assert enumera.plucker_dual_degree(4, 1, 0) == 10
    assert enumera.plucker_bitangents(4, 1, 0) == 16
    assert enumera.plucker_flexes(3, 1, 0) == 3
    assert enumera.pencil_nodal_count(12, 0, 2, [3, 2]) == 7
    assert enumera.polar_tangency_correction(36, 4) == 28
    assert enumera.riemann_hurwitz_branch_count(3) == 4


def _total(ledger):
    return sum(e["count"] * e["multiplicity"] for e in ledger["entries"])


def test_ledgers():
    tri = enumera.triangle_ledger(3)
    assert tri["target_degree"] == 304
    assert _total(tri) == 304

    kum = enumera.kummer_ledger(3)
    assert kum["target_degree"] == 3200
    assert {(e["count"], e["multiplicity"]) for e in kum["entries"]} == {(240, 8), (16, 80)}

    tet = enumera.tetra_ledger(1, seed=0)
    assert _total(tet) == 36

    monoid = enumera.tetra_monoid_ledger(1, seed=0)
    assert _total(monoid) == 36
    assert monoid["entries"][0]["count"] == 21


def test_incidence_and_group():
    assert enumera.verify_incidence("theta") == []
    assert enumera.verify_incidence("grid") == []
    assert enumera.count_offtrope_triples("theta") == 240
    assert enumera.grid_offtrope_orbit_count(True) == 2


def test_fibre_checker():
    fibre = enumera.kummer_fibre_json()
    rows = enumera.check_triple_point_formula(fibre)
    assert len(rows) == 128
    assert all(r["pass"] for r in rows)

    broken = json.loads(fibre)
    broken["double_curves"][0]["triple_points"].pop()
    rows = enumera.check_triple_point_formula(json.dumps(broken))
    assert any(not r["pass"] for r in rows)
