import pytest

import spectra

MOORE6 = {"base": {"ring": "Z"}, "bottom": 0, "ranks": {"0": 1, "1": 1}, "differentials": {"1": [["6"]]}}


def test_smith_and_cokernel():
    s = spectra.smith([[2, 4], [6, 8]])
    assert s["invariant_factors"] == [2, 4]
    assert spectra.cokernel([[6]]) == spectra.FgAbGroup.cyclic(6)
    assert str(spectra.cokernel([[12]], ring="Z[1/3]")) == "Z/4"


def test_big_integers_round_trip():
    n = 2**100 + 1
    g = spectra.FgAbGroup(0, [n])
    assert g.torsion == [n]
    assert g.order() == n


def test_bifunctors():
    a = spectra.FgAbGroup(1, [4])
    b = spectra.FgAbGroup.cyclic(6)
    assert str(spectra.hom(a, b)) == "Z/2 + Z/6"
    assert str(spectra.ext(a, b)) == "Z/2"
    assert str(spectra.tor(a, b)) == "Z/2"
    assert str(spectra.tensor(a, b)) == "Z/2 + Z/6"
    assert str(spectra.localize(b, [2])) == "Z/3"


def test_homology_of_moore_complex():
    h = spectra.homology(MOORE6)
    assert list(h) == [0]
    assert str(h[0]) == "Z/6"
    assert spectra.homology(MOORE6, ring="Z[1/2]")[0] == spectra.FgAbGroup.cyclic(3)
    assert spectra.mod_p_homology(MOORE6, 2) == {0: 1, 1: 1}
    assert spectra.completed_homology(MOORE6, 3) == {0: {"p": 3, "rank": 0, "torsion": [3], "text": "Z/3"}}
    assert spectra.moore_complex(spectra.FgAbGroup.cyclic(6)) == MOORE6


def test_cw_and_models():
    cw = spectra.cw_structure(MOORE6)
    assert cw["cells"] == {"0": 1, "1": 1}
    model = spectra.p_finite_model(MOORE6, 2)
    assert model["map"]["components"]["0"] == [["3"]]
    report = spectra.finiteness_report(MOORE6, [2])
    assert report["primes"][0]["total_mod_p"] == 2


def test_divided_powers_and_completion():
    assert spectra.dp_quotient([2], 4) == {
        "Q": [2],
        "N": 4,
        "cokernel": {"rank": 1, "torsion": []},
        "phi_image": "1/8",
    }
    c = spectra.completion({"atoms": [{"t": "prufer", "p": 2}]}, 2)
    assert c["L0"]["rank"] == 0
    assert c["L1"]["rank"] == 1


def test_errors():
    with pytest.raises(spectra.SchemaError):
        spectra.homology({"ranks": {"0": 1, "1": 1, "2": 1}, "differentials": {"1": [["1"]], "2": [["1"]]}})
    with pytest.raises(spectra.SpectraError):
        spectra.FgAbGroup(0, [4, 2])
    with pytest.raises(spectra.SchemaError):
        spectra.verify("no-such-suite")


def test_verify_is_deterministic():
    a = spectra.verify("moore-rings", seed=42, cases=3)
    b = spectra.verify("moore-rings", seed=42, cases=3)
    assert a == b
    assert a["ok"]
