import io
import json

import pytest

from g2sextic.cli import (
    InvariantReport,
    build_parser,
    criterion_sampling_oracle,
    cuspidal_jet_samples,
    emit,
    main,
    suite_forms,
    suite_g2,
    suite_ode_curvature,
    suite_ode_generalized,
    suite_orbit,
)


def run_cli(argv):
    import contextlib

    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def test_g2_su21_all_pass():
    code, text = run_cli(["g2", "--realform", "su21"])
    assert code == 0
    assert "FAIL" not in text
    assert "c02.lambda" in text and "(3/5)*r10" in text


def test_g2_split_signature():
    code, text = run_cli(["g2", "--realform", "split"])
    assert code == 0
    assert "(3, 4)" in text


def test_g2_su3_signature_convention_mismatch():
    # the computed inertia is (3, 4); the printed pair has the opposite
    # order, so this check reports a failure with an explanatory note
    code, text = run_cli(["g2", "--realform", "su3"])
    assert code == 1
    assert "(3, 4)" in text and "(4, 3)" in text


def test_ode_curvature_commands():
    code, text = run_cli(["ode", "curvature", "--gamma", "3/2"])
    assert code == 0
    assert "6751269/400" in text
    code, text = run_cli(["ode", "curvature", "--gamma", "2"])
    assert code == 1
    assert "excluded" in text


def test_ode_generalized_rhs():
    code, text = run_cli(
        ["ode", "generalized", "--rhs", "(105*y6*y5*y4 - 84*y5^3)/(25*y4^2)", "--order", "7"]
    )
    assert code == 0
    assert '"is_zero": true' in text


def test_ode_generalized_schwarzian():
    code, text = run_cli(["ode", "generalized", "--rhs", "3*y2^2/(2*y1)", "--order", "3"])
    assert code == 0
    assert '"is_zero": true' in text


def test_ode_generalized_numeric_kappa():
    code, text = run_cli(["ode", "generalized", "--kappa", "6751269/400"])
    assert code == 0
    assert '"is_zero": false' not in text
    assert '"kappa": "6751269/400"' in text


def test_ode_generalized_parse_error_position():
    code, text = run_cli(["ode", "generalized", "--rhs", "y2 + nope", "--order", "7"])
    assert code == 1
    assert "position" in text


def test_ode_sample_small():
    code, text = run_cli(["ode", "sample", "--samples", "5", "--seed", "3"])
    assert code == 0
    assert '"samples": 5' in text


def test_orbit_commands():
    code, text = run_cli(["orbit", "2", "3"])
    assert code == 0
    assert "smooth" in text
    code, text = run_cli(["orbit", "2", "5"])
    assert code == 0
    assert "singular" in text
    code, text = run_cli(["orbit", "1", "4"])
    assert code == 0
    assert "smooth" in text
    code, text = run_cli(["orbit", "2", "4"])
    assert code == 1


def test_forms_commands():
    code, text = run_cli(["forms", "i2", "--coeffs", "1,0,0,0,0,0,1"])
    assert code == 0
    assert "forms.i2: 1" in text
    code, text = run_cli(
        ["forms", "i3", "--u", "1,0,0,0,0,0,1", "--v", "1,0,0,0,0,0,1", "--w", "0,1,0,0,0,0,0"]
    )
    assert code == 0
    assert "forms.i3: 0" in text
    code, text = run_cli(
        ["forms", "transvectant", "--u", "1,0,0", "--v", "0,0,1", "-p", "1"]
    )
    assert code == 0
    code, text = run_cli(["forms", "i2", "--coeffs", "1,0"])
    assert code == 1


def test_json_reports_deterministic():
    _, first = run_cli(["g2", "--realform", "su21", "--format", "json"])
    _, second = run_cli(["g2", "--realform", "su21", "--format", "json"])
    assert first == second
    parsed = json.loads(first)
    assert all(set(r) == {"check", "status", "lhs", "rhs", "details"} for r in parsed)


def test_emit_exit_codes():
    ok = InvariantReport("a", "pass")
    bad = InvariantReport("b", "fail")
    rec = InvariantReport("c", "recorded")
    assert emit([ok, rec], "text", io.StringIO()) == 0
    assert emit([ok, bad], "text", io.StringIO()) == 1


def test_report_ordering_by_check_id():
    stream = io.StringIO()
    emit([InvariantReport("z.9", "pass"), InvariantReport("a.1", "pass")], "text", stream)
    lines = stream.getvalue().splitlines()
    assert lines[0].endswith("a.1") and lines[1].endswith("z.9")


def test_seed_changes_sample_points_not_verdicts():
    a = criterion_sampling_oracle(samples=4, seed=1)
    b = criterion_sampling_oracle(samples=4, seed=2)
    assert a[0].status == b[0].status == "pass"
    ja = cuspidal_jet_samples(4, 1)
    jb = cuspidal_jet_samples(4, 2)
    assert ja != jb  # different points, same exact verdict


def test_parser_rejects_unknown_realform():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["g2", "--realform", "bogus"])
