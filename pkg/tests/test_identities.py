from peakpoly import families as F
from peakpoly import identities as I
from peakpoly.polynomial import Poly

ONE_PLUS_X = Poly((1, 1))


def test_row_interleave_reference_row():
    # row 4 merges the two peak rows: odd slots [8, 16], even slots [1, 18, 5]
    assert I.interleave_rows((8, 16), (1, 18, 5), 4) == (1, 8, 18, 16, 5)
    assert I.check_row_interleave(4) is None


def test_row_interleave_euler_corner():
    assert I.check_row_interleave(2) is None
    assert I.check_row_interleave(6) is None


def test_row_interleave_detects_corruption():
    good = list(F.tan_sec_triangle(5)[5])
    good[2] += 1
    witness = I.check_row_interleave(5, r_row=tuple(good))
    assert witness is not None
    assert witness.n == 5 and witness.index == 2
    assert witness.lhs == "59" and witness.rhs == "58"


def test_peak_to_derivative_hand_expansions():
    # n = 3: 4 y^2 (1+y^2) + 2 (1+y^2)^2 = 2 + 8y^2 + 6y^4
    lhs = 4 * Poly((0, 0, 1)) * Poly((1, 0, 1)) + 2 * Poly((1, 0, 1)) ** 2
    assert lhs == Poly((2, 0, 8, 0, 6))
    assert I.check_peak_to_derivative(3) is None
    # n = 1: the left-peak side is the single term y
    assert I.check_peak_to_derivative(1) is None
    # n = 4: y^4 + 18y^2(1+y^2) + 5(1+y^2)^2 = 5 + 28y^2 + 24y^4
    lhs = Poly((0, 0, 0, 0, 1)) + 18 * Poly((0, 0, 1)) * Poly((1, 0, 1)) + 5 * Poly((1, 0, 1)) ** 2
    assert lhs == Poly((5, 0, 28, 0, 24))
    assert I.check_peak_to_derivative(4) is None


def test_stembridge_hand_values():
    # n = 3: 4(1+x)^2 + 8x = 4 + 16x + 4x^2 = 4 A_3
    assert 4 * ONE_PLUS_X**2 + Poly((0, 8)) == 4 * Poly((1, 4, 1))
    for n in (1, 3, 4, 9):
        assert I.check_stembridge(n) is None


def test_petersen_hand_values():
    # n = 2: (1+x)^2 + 4x = 1 + 6x + x^2 on both sides
    lhs = ONE_PLUS_X**2 + Poly((0, 4))
    rhs = Poly((1, -1)) ** 2 + 4 * Poly((0, 1, -1)) + 4 * Poly((0, 1, 1))
    assert lhs == rhs == Poly((1, 6, 1))
    for n in (1, 2, 5, 8):
        assert I.check_petersen(n) is None


def test_dilks_checks_against_oracle():
    for n in range(1, 6):
        assert I.check_dilks_affine(n) is None
        assert I.check_dilks_type_b(n) is None


def test_dilks_checks_against_gf_beyond_oracle():
    for n in (8, 9, 10):
        assert I.check_dilks_affine(n, source="gf") is None
        assert I.check_dilks_type_b(n, source="gf") is None


def test_bell_checks():
    for n in range(1, 9):
        assert I.check_bell_expansion(n) is None
        assert I.check_bell_x0(n) is None
        assert I.check_bell_x1(n) is None


def test_identity_suite_passes_at_defaults():
    results = I.run_identity_suite()
    assert all(r.passed for r in results)
    ids = [r.check_id for r in results]
    assert "row_interleave" in ids
    assert "dilks_affine_gf" in ids


def test_identity_suite_degenerate_range():
    results = I.run_identity_suite(nmax_exact=1, signed_nmax=1)
    assert all(r.passed for r in results)


def test_gf_suite_passes():
    results = I.run_gf_suite(gf_order=10, signed_nmax=5)
    assert all(r.passed for r in results)
    assert [r.check_id for r in results][:8] == [
        "gf_A", "gf_W", "gf_WL", "gf_P", "gf_C", "gf_CT", "gf_T", "gf_R",
    ]


def test_roots_and_clt_suites():
    assert all(r.passed for r in I.run_roots_suite(10))
    clt = I.run_clt_suite(12)
    assert len(clt) == 9
    assert all(r.passed for r in clt)
    assert clt[0].n_range == (4, 4)


def test_oracle_suite_passes():
    results = I.run_oracle_suite(oracle_nmax=6, signed_nmax=4)
    assert all(r.passed for r in results)


def test_run_all_aggregate_and_order_stability():
    results_a = I.run_all(8, 6, 4, 8, 8, 8)
    results_b = I.run_all(8, 6, 4, 8, 8, 8)
    assert I.aggregate_verdict(results_a) == "pass"
    assert [r.to_json() for r in results_a] == [r.to_json() for r in results_b]


def test_check_result_serialization():
    witness = I.Witness(3, 1, "5", "4")
    res = I.CheckResult("demo", (1, 3), "fail", witness)
    doc = res.to_json()
    assert doc == {
        "check_id": "demo",
        "n_range": [1, 3],
        "verdict": "fail",
        "witness": {"n": 3, "index": 1, "lhs": "5", "rhs": "4"},
    }
    assert I.CheckResult("demo", (1, 3), "pass").to_json() == {
        "check_id": "demo",
        "n_range": [1, 3],
        "verdict": "pass",
    }


def test_aggregate_reports_smallest_failing_n():
    calls = []

    def flaky(n):
        calls.append(n)
        if n >= 4:
            return I.Witness(n, 0, "bad", "good")
        return None

    result = I._aggregate("demo", 1, 9, flaky)
    assert result.verdict == "fail"
    assert result.witness.n == 4
    assert calls == [1, 2, 3, 4]


def test_aggregate_turns_exceptions_into_failures():
    def boom(n):
        raise ValueError("injected")

    result = I._aggregate("demo", 2, 5, boom)
    assert result.verdict == "fail"
    assert result.witness.n == 2
    assert result.witness.lhs == "ValueError"
