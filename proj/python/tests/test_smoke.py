import cmath
import json
import math

import pytest

import nclorentz as nc


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def test_basis_product():
    assert close(nc.mul([0, 1, 0, 0], [0, 0, 1, 0]), [0, 0, 0, 1])
    assert nc.norm([0, 1, 1j, 0]) == 0


def test_rotation_by_twice_the_angle():
    L = nc.LorentzElement.rotation([0, 0, 1], 0.3)
    v = L.act_vector([1, 0, 0])
    assert close(v, [math.cos(0.6), math.sin(0.6), 0])


def test_not_unit_raises():
    with pytest.raises(nc.Error):
        nc.LorentzElement(1, [1, 0, 0])


def test_forward_example():
    D, H = nc.forward([1, 0, 0], [1, 0, 0], [0, 0, 0], [0.1, 0, 0])
    assert close(D, [1.1, 0, 0], 1e-15)
    assert close(H, [0.8, 0, 0], 1e-15)


def test_small_group_and_canonical_form():
    k = nc.k_from_vectors([0.2, 0, 0], [0, 0, 0.3])
    assert nc.classify(k) == "NonIsotropic"
    L = nc.small_group_element(k, 0.4 + 0.3j)
    assert nc.stabilizes(L, k) <= 1e-12
    C, kc = nc.canonical_form(k)
    assert abs(nc.invariant_square(kc) - nc.invariant_square(k)) <= 1e-12
    iso = nc.k_from_vectors([0, -1, 0], [1, 0, 0])
    assert nc.describe(iso)["kind"] == "Isotropic"
    assert nc.stabilizes(nc.isotropic_element(iso, 1 + 1j, -1), iso) <= 1e-12


def test_factorize_recomposes():
    L = nc.small_group_element([0, 0, 1], 0.5 + 0.25j)
    rot, boost = L.factorize()
    assert close((rot * boost).quat, L.quat)


def test_duality_scan_zeros():
    rows = nc.duality_scan([1, 0, 0], [0, 1, 0], [0.2, 0, 0], [0, 0, 0.3], n=72)
    zeros = [r for r in rows if r[2] != "none"]
    assert [r[2] for r in zeros] == ["identity", "plus_i", "sign_flip", "minus_i"]
    assert all(r[1] <= 1e-11 for r in zeros)
    assert min(r[1] for r in rows if r[2] == "none") > 1e-4


def test_analyze():
    report = json.loads(nc.analyze('{"epsilon": [0, 0, 0], "theta": [0, 0, 1]}', scan_n=72, trials=5))
    assert report["classification"] == "NonIsotropic"
    assert report["passed"] is True
    with pytest.raises(nc.Error):
        nc.analyze('{"theta_matrix": [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]}')
