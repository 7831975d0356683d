import pytest

import kcrystal


def test_catalog():
    names = kcrystal.group_names()
    assert len(names) == 17
    assert names[0] == "p1"
    spec = kcrystal.group_spec("pg")
    assert spec["schema_version"] == kcrystal.schema_version
    assert spec["kind"] == "group_spec"
    assert kcrystal.validate("p6mm") == []


def test_classes():
    doc = kcrystal.conjugacy_classes("p2")
    assert doc["kind"] == "conj_classes"
    assert len(doc["payload"]) == 5
    assert len(kcrystal.conjugacy_classes("pg", mode="torus")["payload"]) == 2


@pytest.mark.parametrize("name,k0,k1", [
    ("p31m", "Z^5", "Z"),
    ("p4mg", "Z^6", "0"),
    ("pg", "Z", "Z + Z/2"),
])
def test_k_homology(name, k0, k1):
    doc = kcrystal.k_homology(name)
    assert doc["kind"] == "k_result"
    assert doc["payload"]["K0"] == k0
    assert doc["payload"]["K1"] == k1
    torus = kcrystal.k_homology(name, mode="torus")["payload"]
    assert (torus["K0"], torus["K1"]) == (k0, k1)


def test_rational():
    assert kcrystal.rational_ranks("pg") == (1, 1)
    assert kcrystal.rational_ranks("pgg2") == (3, 0)


def test_verify():
    doc = kcrystal.verify("pm")
    assert doc["kind"] == "verification_reports"
    assert len(doc["payload"]) == 1
    statuses = {item["status"] for item in doc["payload"][0]["items"]}
    assert statuses == {"Match"}


def test_render():
    svg = kcrystal.render_svg("p6", cells=2)
    assert svg.startswith("<?xml")
    assert svg.count('class="rot6"') == 9
    assert svg == kcrystal.render_svg("p6", cells=2)


def test_errors():
    with pytest.raises(kcrystal.NotFound):
        kcrystal.k_homology("nosuch")
    with pytest.raises(kcrystal.Error):
        kcrystal.conjugacy_classes("p2", mode="sphere")
    with pytest.raises(kcrystal.DomainError):
        kcrystal.render_svg("p2", cells=0)
