"""Smoke tests for the python bindings."""

import math

import pytest

import quon


def test_q_numbers():
    assert quon.q_bracket(3, 1.0) == 3.0
    assert quon.q_bracket(2, 0.5) == pytest.approx(1.5)
    assert quon.q_factorial(3, 1.0) == 6.0
    p = quon.q_factorial_poly(3)
    assert p.coeffs == [1, 2, 2, 1]
    assert str(p) == "1 + 2q + 2q^2 + q^3"
    assert p(1.0) == pytest.approx(6.0)


def test_vev():
    assert quon.vev("a1 ad1", 0.3) == pytest.approx(1.0)
    assert quon.vev("a1 ad2", 0.3) == pytest.approx(0.0)
    assert str(quon.vev_poly("a2 a1 ad2 ad1")) == "q"
    assert quon.overlap([1, 2], [2, 1], 0.37) == pytest.approx(0.37)
    assert quon.overlap_poly([1, 1], [1, 1]).coeffs == [1, 1]


def test_classify():
    clusters = quon.classify({1: 1, 2: 1, 3: 1}, q=0.3, exact=True)
    assert [c["multiplicity"] for c in clusters] == [1, 2, 2, 1]
    assert clusters[0]["sector"] == "symmetric"
    assert str(clusters[0]["exact"]) == "1 + 2q + 2q^2 + q^3"
    assert clusters[-1]["sector"] == "antisymmetric"

    g = quon.gram({1: 1, 2: 1}, q=0.25)
    assert g == [[1.0, 0.25], [0.25, 1.0]]

    with pytest.raises(quon.CapExceeded):
        quon.permutation_words({0: 9})


def test_symmetric_states():
    state = quon.symmetric_state({0: 1, 1: 1}, q=0.6)
    expect = 1.0 / math.sqrt(2 * 1.6)
    assert state[(0, 1)] == pytest.approx(expect)
    assert state[(1, 0)] == pytest.approx(expect)

    coeff, lowered = quon.lower_symmetric({0: 2}, mode=0, q=0.42)
    assert coeff == pytest.approx(math.sqrt(1.42))
    assert lowered == {0: 1}
    assert quon.raise_symmetric_element({}, mode=0, q=0.9) == pytest.approx(1.0)


def test_oscillator():
    assert quon.oscillator_energy(0, q=0.5) == pytest.approx(1.5)
    assert quon.oscillator_energy(2, q=1.0) == pytest.approx(3.5)
    assert quon.oscillator_degeneracy(3) == 10
    levels = quon.oscillator_full_solve(2, q=0.9)
    sym = [l for l in levels if l["sector"] == "symmetric"]
    assert len(sym) == 1
    assert sym[0]["energy"] == pytest.approx(quon.oscillator_energy(2, q=0.9), rel=1e-10)
    assert sym[0]["multiplicity"] == 6


def test_rotor():
    assert quon.rotor_energy(2, q=1.0) == 6.0
    assert quon.rotor_energy(2, q=0.99478) == pytest.approx(5.9222156623581847, rel=1e-14)
    el = quon.rotor_matrix_element("[L+,L-]", {0: 2, 1: 1}, {0: 2, 1: 1}, q=0.7)
    expect = quon.q_bracket(3, 0.7) / 3.0
    assert el == pytest.approx(expect, rel=1e-12)
    l2 = quon.rotor_matrix_element("L2", {0: 2}, {0: 2}, q=0.7)
    b = quon.q_bracket(2, 0.7)
    assert l2 == pytest.approx(b / 2 * (b / 2 + 1), rel=1e-12)


def test_fit_roundtrip():
    a0, q0 = 7.156, 0.99478
    levels = [(l, quon.rotor_energy(l, q=q0, inertia_A=a0)) for l in range(2, 26, 2)]
    fit = quon.fit_band(levels)
    assert abs(fit["q"] - q0) < 1e-4
    assert abs(fit["A"] - a0) / a0 < 1e-3
    assert not fit["boundary"]

    rigid = [(l, 4.0 * l * (l + 1)) for l in range(2, 10, 2)]
    assert quon.fit_band(rigid)["boundary"]

    with pytest.raises(quon.BandInputError):
        quon.fit_band([(0, 0.0)])


def test_verification_entry_point():
    results = quon.run_verification("gram", max_n=3)
    assert all(r["failures"] == 0 for r in results)
