import json
from fractions import Fraction

import pytest
from click.testing import CliRunner
from hypothesis import given, settings, strategies as st

from qhopf.exactmath import Scalar
from qhopf.cli import (
    ParseError,
    algebras_equal,
    main,
    parse_scalar,
    parse_text,
    serialize,
)
from qhopf.presets import preset_path


@pytest.fixture()
def runner():
    return CliRunner()


def preset_text(name):
    return preset_path(name).read_text(encoding="utf-8")


# ---------------------------------------------------------------------------
# scalar literals


def test_scalar_literal_examples():
    assert parse_scalar("1/2*z^3 - 1", 8) == (
        Scalar.rational(1, 2, order=8) * Scalar.zeta(8) ** 3 - Scalar.one(8)
    )
    assert parse_scalar("z^4", 4).is_one()
    assert parse_scalar("-3/4", 1).to_fraction() == Fraction(-3, 4)
    assert parse_scalar("2*3", 1).to_fraction() == 6
    assert parse_scalar("(1 + z)*(1 - z)", 4) == Scalar.rational(2, order=4)


def test_scalar_literal_roundtrip():
    for text in ("0", "1", "-1/2", "z", "-z^3", "1/2*z^3 - 1", "z^2 + 1/7"):
        s = parse_scalar(text, 8)
        assert parse_scalar(str(s), 8) == s


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=9),
                min_size=4, max_size=4))
def test_scalar_literal_fuzz_roundtrip(coeffs):
    s = Scalar(8, [Fraction(c) for c in coeffs])
    assert parse_scalar(str(s), 8) == s


def test_scalar_literal_errors():
    with pytest.raises(ParseError):
        parse_scalar("1//2", 4)
    with pytest.raises(ParseError):
        parse_scalar("q", 4)
    with pytest.raises(ParseError):
        parse_scalar("1 +", 4)
    with pytest.raises(ParseError):
        parse_scalar("1/0", 4)


# ---------------------------------------------------------------------------
# definition files


def test_roundtrip_all_presets(presets):
    for name, p in presets.items():
        text = serialize(p.algebra, p.simples)
        alg2, simples2 = parse_text(text, source="roundtrip")
        assert algebras_equal(p.algebra, alg2), name
        assert serialize(alg2, simples2) == text, name


def test_parse_reports_missing_section():
    with pytest.raises(ParseError, match="mult"):
        parse_text("dim 1\nfield 1\n\ncounit:\n0 = 1\n")


def test_parse_reports_bad_index():
    text = preset_text("trivial").replace("0 0 0 = 1", "0 0 7 = 1", 1)
    with pytest.raises(ParseError, match="out of range"):
        parse_text(text)


def test_parse_reports_bad_literal_with_line():
    text = preset_text("trivial").replace("mult:\n0 0 0 = 1", "mult:\n0 0 0 = 1%", 1)
    with pytest.raises(ParseError, match="scalar literal"):
        parse_text(text)


def test_parse_solves_missing_inverses():
    text = preset_text("double_Z2")
    lines = [l for l in text.splitlines() if l.strip()]
    # drop the R_inv section
    out, skip = [], False
    for line in lines:
        if line.startswith("R_inv:"):
            skip = True
            continue
        if skip and "=" in line:
            continue
        skip = False
        out.append(line)
    alg, _ = parse_text("\n".join(out))
    assert any("R_inv solved" in n for n in alg.notes)
    from qhopf.qha import validate

    assert validate(alg).ok


def test_parse_records_failed_inverse():
    text = (
        "dim 2\nfield 1\n\nmult:\n0 0 0 = 1\n0 1 1 = 1\n1 0 1 = 1\n\n"
        "counit:\n0 = 1\n1 = 1\n\ncoproduct:\n0 0 0 = 1\n1 1 1 = 1\n\n"
        "antipode:\n0 0 = 1\n1 1 = 1\n\nphi:\n0 0 0 = 1\n\nalpha:\n0 = 1\n\n"
        "beta:\n0 = 1\n\nR:\n1 1 = 1\n"  # R is nilpotent-ish, not invertible
    )
    alg, _ = parse_text(text)
    assert any("not invertible" in n for n in alg.notes)
    from qhopf.qha import validate

    assert not validate(alg).ok


# ---------------------------------------------------------------------------
# commands and exit codes


def test_check_preset_exit_zero(runner):
    res = runner.invoke(main, ["check", "trivial"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["ok"] is True


def test_check_mutated_file_exit_one(runner, tmp_path, presets):
    from qhopf.presets import mutate

    bad = mutate(presets["double_Z2"].algebra, ("r_matrix", (0, 0)),
                 Scalar.rational(1))
    path = tmp_path / "bad.alg"
    path.write_text(serialize(bad), encoding="utf-8")
    res = runner.invoke(main, ["check", str(path)])
    assert res.exit_code == 1
    payload = json.loads(res.output)
    assert payload["ok"] is False
    witnessed = [c for c in payload["checks"] if not c["ok"]]
    assert witnessed and all(c["witness"] is not None for c in witnessed)


def test_missing_file_exit_two(runner):
    res = runner.invoke(main, ["check", "/nonexistent/file.alg"])
    assert res.exit_code == 2


def test_parse_error_exit_two(runner, tmp_path):
    path = tmp_path / "broken.alg"
    path.write_text("dim 1\nfield 1\n\nmult:\n0 0 0 = ??\n", encoding="utf-8")
    res = runner.invoke(main, ["check", str(path)])
    assert res.exit_code == 2


def test_derived_command(runner):
    res = runner.invoke(main, ["derived", "double_Z2"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert set(payload) >= {"twist_f", "u", "u_tilde", "u_inv", "monodromy"}


def test_coend_command(runner):
    res = runner.invoke(main, ["coend", "twisted_double_Z2"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert set(payload["intermediates"]) == {"D", "W", "X_Q", "X_D"}


def test_factorisable_command(runner):
    res = runner.invoke(main, ["factorisable", "group_Z2_trivialR"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["is_factorisable"] is False and payload["tests_agree"] is True


def test_modular_command_with_projective(runner):
    res = runner.invoke(main, ["modular", "double_Z2"])
    assert res.exit_code == 0
    assert "normalisation_note" in json.loads(res.output)
    res = runner.invoke(main, ["modular", "double_Z2", "--projective"])
    assert "normalisation_note" not in json.loads(res.output)


def test_modular_rejects_nonfactorisable(runner):
    res = runner.invoke(main, ["modular", "group_Z2_trivialR"])
    assert res.exit_code == 1


def test_fusion_csv_group_law(runner):
    res = runner.invoke(main, ["fusion", "double_Z2", "--output", "csv"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "U,V,W,N"
    assert len(lines) == 1 + 4 * 4 * 4
    entries = {tuple(l.split(",")[:3]): int(l.split(",")[3]) for l in lines[1:]}
    assert entries[("s01", "s01", "s00")] == 1
    assert entries[("s01", "s10", "s11")] == 1
    assert entries[("s01", "s10", "s00")] == 0


def test_fusion_no_oracle(runner):
    res = runner.invoke(main, ["fusion", "twisted_double_Z2", "--no-oracle"])
    assert res.exit_code == 0


def test_fusion_without_simples_exit_two(runner, tmp_path, presets):
    path = tmp_path / "nosimples.alg"
    path.write_text(serialize(presets["double_Z2"].algebra), encoding="utf-8")
    res = runner.invoke(main, ["fusion", str(path)])
    assert res.exit_code == 2


def test_csv_rejected_elsewhere(runner):
    res = runner.invoke(main, ["check", "trivial", "--output", "csv"])
    assert res.exit_code != 0


def test_markdown_output(runner):
    res = runner.invoke(main, ["check", "trivial", "--output", "md"])
    assert res.exit_code == 0
    assert res.output.startswith("# axiom report")


def test_report_deterministic(runner):
    a = runner.invoke(main, ["report", "double_Z2"])
    b = runner.invoke(main, ["report", "double_Z2"])
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output
    payload = json.loads(a.output)
    assert payload["modular"] is not None and payload["fusion"] is not None


def test_report_on_nonfactorisable_skips_modular(runner):
    res = runner.invoke(main, ["report", "group_Z2_trivialR"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["modular"] is None
    assert "factorisable" in payload["modular_skipped"]


def test_field_order_embedding(runner):
    res = runner.invoke(main, ["check", "double_Z2", "--field-order", "4"])
    assert res.exit_code == 0
    # 6 is not a multiple of the declared order 4
    res = runner.invoke(main, ["check", "twisted_double_Z2", "--field-order", "6"])
    assert res.exit_code == 2


def test_out_writes_file(runner, tmp_path):
    target = tmp_path / "report.json"
    res = runner.invoke(main, ["check", "trivial", "--out", str(target)])
    assert res.exit_code == 0
    assert json.loads(target.read_text())["ok"] is True
