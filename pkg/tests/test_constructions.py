from math import gcd

import numpy as np
import pytest

from opgraph.constructions import (
    Section4Params,
    baseline_bounds,
    build_code_K1,
    build_remark2,
    build_section2,
    build_section3,
    build_section4,
    claimed_dim_remark2,
    claimed_dim_section3,
    claimed_dim_section4,
    enumerate_section4_params,
    predicted_dims,
    residue_set_A,
)
from opgraph.graph import compress, graph_dim, graph_from_labels, is_anticlique
from opgraph.linalg import kron, max_abs
from opgraph.weyl import fourier_basis, label, weyl_dense, x_matrix, z_matrix


def section3_label_count(n: int) -> int:
    # independent count: powers (X Z^k)^s carry exponents (s, ks), and for
    # fixed s the reachable Z-exponents form the subgroup of size n/gcd(n,s)
    return 2 * sum(n // gcd(n, s) for s in range(1, n)) + 1


def section4_label_count(params: Section4Params) -> int:
    # independent count by family: off-diagonal shifts contribute n^3(n-1);
    # each allowed equal shift contributes n^2 clock pairs; every other equal
    # shift contributes only the pairs with k+s off the subgroup
    n = params.n
    a = residue_set_A(params.y, params.h, params.d)
    a_strict = a.count_strict(n)
    off_subgroup_pairs = n * n - n * params.y
    return n**3 * (n - 1) + a_strict * n**2 + (n - a_strict) * off_subgroup_pairs + 1


def test_section2_shape_and_dimension():
    g, code = build_section2()
    assert g.space_dim == 4
    assert code.code_dim == 2
    assert graph_dim(g, "gram") == 5


def test_section2_orthogonality_table():
    # all sixteen inner products <f_a, x f_b> vanish for the four error words
    g, code = build_section2()
    compressed = compress(g, code)
    for c in compressed[1:]:
        assert max_abs(c) < 1e-12


def test_section2_anticlique():
    g, code = build_section2()
    assert is_anticlique(g, code).verdict


def test_section3_small_cases():
    g3, code3 = build_section3(3)
    assert code3.code_dim == 3
    assert graph_dim(g3, "labels") == 13
    assert is_anticlique(g3, code3).verdict
    g5, _ = build_section3(5)
    assert graph_dim(g5, "labels") == 41 == claimed_dim_section3(5)


def test_section3_rejects_small_n():
    with pytest.raises(ValueError, match="n > 2"):
        build_section3(2)
    with pytest.raises(ValueError):
        build_section3(1)
    g, code = build_section3(2, allow_n2=True)
    assert code.code_dim == 2
    assert is_anticlique(g, code).verdict


def test_section3_error_words_vanish_on_code():
    # <h_j, (X Z^k)^s h_m> = 0 on either factor for every 1 <= s <= n-1
    for n in (3, 4, 5, 6):
        f = fourier_basis(n)
        h = [kron(f[:, j], f[:, j]) for j in range(n)]
        eye = np.eye(n)
        for k in range(n):
            base = weyl_dense(label(n, 1, k))
            power = np.eye(n, dtype=complex)
            for _ in range(1, n):
                power = power @ base
                for side in (kron(power, eye), kron(eye, power)):
                    table = np.array([[np.vdot(hj, side @ hm) for hm in h] for hj in h])
                    assert max_abs(table) < 1e-12, (n, k)


def test_section3_anticlique_through_eight():
    for n in range(3, 9):
        g, code = build_section3(n)
        assert is_anticlique(g, code).verdict, n


def test_section3_label_count_matches_independent_count():
    for n in range(3, 9):
        g, _ = build_section3(n)
        assert graph_dim(g, "labels") == section3_label_count(n)


def test_section3_oracles_agree():
    for n in range(3, 7):
        g, _ = build_section3(n)
        dims = graph_dim(g, "both")
        assert dims.agree, n


def test_residue_set_examples():
    a = residue_set_A(4, 1, 2)
    assert a.allowed == frozenset({1, 3})
    assert a.members(8) == [1, 3, 5, 7]
    assert a.count_strict(8) == 4
    assert residue_set_A(2, 0, 2).allowed == frozenset()


def test_residue_zero_never_allowed():
    for params in enumerate_section4_params(12):
        a = residue_set_A(params.y, params.h, params.d)
        assert 0 not in a


def test_residue_set_symmetric():
    # allowed residues come in pairs r, y-r, matching adjoint closure of the
    # equal-shift family
    for params in enumerate_section4_params(12):
        a = residue_set_A(params.y, params.h, params.d)
        assert all((params.y - r) % params.y in a.allowed for r in a.allowed)


def test_code_k1_expected_supports():
    params = Section4Params(2, 4, 1, 2)
    code = build_code_K1(params)
    assert code.code_dim == 2
    f = fourier_basis(8)
    q1 = (kron(f[:, 0], f[:, 0]) + kron(f[:, 4], f[:, 4])) / np.sqrt(2)
    q2 = (kron(f[:, 2], f[:, 2]) + kron(f[:, 6], f[:, 6])) / np.sqrt(2)
    assert np.linalg.norm(code.isometry[:, 0] - q1) < 1e-12
    assert np.linalg.norm(code.isometry[:, 1] - q2) < 1e-12


def test_code_k1_orthonormal_all_params():
    for params in enumerate_section4_params(12):
        code = build_code_K1(params)
        gram = code.isometry.conj().T @ code.isometry
        assert max_abs(gram - np.eye(params.d)) < 1e-12, params


def test_code_k1_period_invariance():
    # the diagonal shift by y steps fixes every code vector exactly
    for params in enumerate_section4_params(10):
        n = params.n
        code = build_code_K1(params)
        xy = np.linalg.matrix_power(x_matrix(n), params.y)
        shift = kron(xy, xy)
        assert max_abs(shift @ code.isometry - code.isometry) < 1e-12, params


def test_allowed_shifts_move_code_off_itself():
    # for m in the allowed set, the diagonal shift by m maps every code
    # vector orthogonally to the whole code
    for params in enumerate_section4_params(10):
        n = params.n
        a = residue_set_A(params.y, params.h, params.d)
        code = build_code_K1(params)
        x = x_matrix(n)
        for m in range(1, n):
            if m not in a:
                continue
            xm = np.linalg.matrix_power(x, m)
            shifted = kron(xm, xm) @ code.isometry
            assert max_abs(code.isometry.conj().T @ shifted) < 1e-12, (params, m)


def test_clock_words_off_subgroup_annihilate_q1():
    # <(I (x) Z^(k+s)) q1, q1> = 0 whenever k+s is not a multiple of p
    for params in enumerate_section4_params(10):
        n = params.n
        code = build_code_K1(params)
        q1 = code.isometry[:, 0]
        z = z_matrix(n)
        for r in range(1, n):
            if r % params.p == 0:
                continue
            op = kron(np.eye(n), np.linalg.matrix_power(z, r))
            assert abs(np.vdot(op @ q1, q1)) < 1e-12, (params, r)


def test_section4_reference_point():
    params = Section4Params(2, 4, 1, 2)
    g, code = build_section4(params)
    assert g.space_dim == 64
    assert code.code_dim == 2
    assert graph_dim(g, "labels") == 3969
    report = is_anticlique(g, code)
    assert report.verdict
    assert report.residual < 1e-9


def test_section4_label_count_matches_independent_count():
    for params in enumerate_section4_params(9):
        g, _ = build_section4(params)
        assert graph_dim(g, "labels") == section4_label_count(params), params


def test_section4_oracles_agree_small():
    for params in enumerate_section4_params(6):
        g, _ = build_section4(params)
        dims = graph_dim(g, "both")
        assert dims.agree, params


def test_section4_contains_section3_span():
    params = Section4Params(2, 3, 0, 2)
    g4, _ = build_section4(params)
    g3, _ = build_section3(params.n)
    combined = graph_from_labels(params.n, list(g4.label_pairs) + list(g3.label_pairs))
    assert combined.label_keys() == g4.label_keys()


def test_remark2_anticlique_and_dimension():
    for n in (3, 4):
        g, code = build_remark2(n)
        assert graph_dim(g, "labels") == claimed_dim_remark2(n) == n**3 * (n - 1) + 1
        assert is_anticlique(g, code).verdict


def test_remark2_oracles_agree():
    for n in (3, 4):
        dims = graph_dim(build_remark2(n)[0], "both")
        assert dims.agree, n


def test_predicted_dims_reference_values():
    assert claimed_dim_section3(3) == 13
    assert claimed_dim_section3(4) == 25  # differs from the computed 21
    params = Section4Params(2, 4, 1, 2)
    predicted = predicted_dims(params)
    assert predicted.section4 == 3921
    assert predicted.a_strict == 4
    assert predicted.section3 == claimed_dim_section3(8)


def test_params_validation_messages():
    with pytest.raises(ValueError, match=r"p >= 2"):
        Section4Params(1, 4, 1, 2)
    with pytest.raises(ValueError, match=r"y >= 2"):
        Section4Params(2, 1, 0, 2)
    with pytest.raises(ValueError, match=r"h >= 0"):
        Section4Params(2, 4, -1, 2)
    with pytest.raises(ValueError, match=r"d >= 2"):
        Section4Params(2, 2, 0, 1)
    with pytest.raises(ValueError, match=r"\(h\+1\)\(d\+1\) >= y"):
        Section4Params(2, 4, 0, 2)
    with pytest.raises(ValueError, match=r"y >= \(h\+1\)d"):
        Section4Params(2, 4, 1, 3)


def test_params_d1_override():
    params = Section4Params(2, 2, 1, 1, allow_d1=True)
    code = build_code_K1(params)
    assert code.code_dim == 1


def test_enumerate_section4_params():
    points = enumerate_section4_params(12)
    assert Section4Params(2, 4, 1, 2) in points
    assert all(q.n <= 12 and q.d >= 2 for q in points)
    keys = [(q.n, q.p, q.y, q.h, q.d) for q in points]
    assert keys == sorted(keys)
    assert enumerate_section4_params(3) == []


def test_baseline_bounds_cases():
    assert baseline_bounds(16, 2) == {"knill_max": 2, "commutative_max": 14}
    assert baseline_bounds(81, 3) == {"knill_max": 4, "commutative_max": 39}
    assert baseline_bounds(4, 2) == {"knill_max": 1, "commutative_max": 2}
    with pytest.raises(ValueError):
        baseline_bounds(16, 1)
    with pytest.raises(ValueError):
        baseline_bounds(2, 4)
