import random

import pytest

import hecke


def test_modular_curve():
    for k in range(-10, 11):
        e, _ = hecke.symplectic_exponent([[k]], -k)
        assert e == -min(1, k)
    assert hecke.symplectic_s_exponent(-2) == -2


def test_gu21():
    for k1 in range(0, 6):
        for k2 in range(0, k1 + 1):
            a, b = [k1, k2], [1]
            assert hecke.unitary_exponent(a, b, 0) == -1
            assert hecke.unitary_exponent(a, b, 1) == -1 - min(1, k2)
            assert hecke.unitary_exponent(a, b, 2) == -1 - min(k2, k1 + k2)
            assert hecke.unitary_exponent(a, b, 3) == -k1 - k2


def test_local_model_agrees():
    rng = random.Random(3)
    for _ in range(100):
        g = rng.randint(1, 3)
        k = sorted((rng.randint(-8, 8) for _ in range(g)), reverse=True)
        e, _ = hecke.symplectic_exponent([k], -sum(k))
        assert hecke.normalized_correspondence_exponent_symplectic(k) == e


def test_strata_and_oracle():
    assert len(hecke.strata_linear(3, 2, 1, 1)) == 2
    for s in hecke.strata_symplectic(2):
        assert hecke.lie_quotient_oracle_symplectic(2, s["param"]) == s["kernel_rank"]
    c = hecke.census_linear(2, 1, 1, [0, 1], 2)
    assert c["signatures"] == 3 == hecke.admissible_size("gl", 2, [0, 1], [1, 0])


def test_run_and_errors():
    code, report = hecke.run({"command": "katz-mazur", "valuations": [0, 0], "infchar": [[0, 0]]})
    assert code == 0 and report["pass"]
    code, report = hecke.run({"command": "strata", "bogus": 1})
    assert code == 2 and "bogus" in report["error"]["message"]
    with pytest.raises(hecke.HeckeError):
        hecke.strata_symplectic(0)
    assert hecke.katz_mazur(["1/2", "-1/2"], [[0, 0]]) == (False, 1)
