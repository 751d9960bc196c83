import json

from alcove_kl.cache import cache_dir
from alcove_kl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kl_command_longest_element(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "kl", "--type", "A", "--rank", "2", "--w", "1,2,1",
        "--cache-dir", str(tmp_path),
    )
    assert code == 0
    assert "e|0,0" in out and "v^3" in out


def test_kl_rerun_hits_cache_identical_bytes(tmp_path, capsys):
    args = ("kl", "--type", "A", "--rank", "2", "--w", "2,1", "--cache-dir", str(tmp_path))
    code1, out1, _ = run(capsys, *args)
    cache_file = tmp_path / "kl_A2.jsonl"
    assert cache_file.exists()
    stamp = cache_file.read_text()
    code2, out2, _ = run(capsys, *args)
    assert (code1, code2) == (0, 0)
    assert out1 == out2
    assert cache_file.read_text() == stamp  # no recompute appended


def test_cache_corruption_triggers_recompute(tmp_path, capsys):
    args = ("kl", "--type", "A", "--rank", "1", "--w", "1,0", "--cache-dir", str(tmp_path))
    _, out1, _ = run(capsys, *args)
    cache_file = tmp_path / "kl_A1.jsonl"
    lines = cache_file.read_text().splitlines()
    broken = lines[0][:-10] + '"corrupted"}'
    cache_file.write_text(broken + "\n")
    code, out2, _ = run(capsys, *args)
    assert code == 0
    assert out2 == out1
    assert len(cache_file.read_text().splitlines()) == 2  # fresh record appended


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("ALCOVE_KL_CACHE", str(tmp_path / "envcache"))
    assert cache_dir() == tmp_path / "envcache"
    monkeypatch.delenv("ALCOVE_KL_CACHE")
    assert "alcove-kl" in str(cache_dir())


def test_periodic_command_dihedral_values(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "periodic", "--type", "A", "--rank", "1", "--p", "5",
        "--lmax", "6", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    values = {
        line.split()[2]
        for line in out.splitlines()[1:]
        if line.strip() and not line.startswith("#")
    }
    assert values <= {"0", "1", "v"}


def test_periodic_json_format(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "periodic", "--type", "A", "--rank", "1", "--p", "5",
        "--lmax", "2", "--format", "json", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    rows = json.loads(out)
    assert all(set(r) == {"y", "w", "p", "stabilized"} for r in rows)


def test_ext_constant_term(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "ext", "--type", "A", "--rank", "2", "--p", "5",
        "--w", "1", "--y", "1", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    assert "conditional on Lusztig's conjecture" in out
    assert "0       1" in out or "0  1" in out


def test_loewy_two_layers(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "loewy", "--type", "A", "--rank", "1", "--p", "5",
        "--w", "0,1", "--lmax", "6", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    layers = [ln.split()[0] for ln in out.splitlines() if ln and ln[0].isdigit()]
    assert layers == ["0", "1"]


def test_char_total(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "char", "--type", "A", "--rank", "2", "--p", "5",
        "--module", "Z", "--lam", "0,0", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    assert "# total 125" in out


def test_config_error_exit_code(tmp_path, capsys):
    code, _, err = run(
        capsys,
        "periodic", "--type", "Q", "--rank", "2", "--p", "5",
        "--cache-dir", str(tmp_path),
    )
    assert code == 2
    assert json.loads(err)["error"] == "config"
    code, _, err = run(
        capsys,
        "periodic", "--type", "A", "--rank", "2", "--p", "4",
        "--cache-dir", str(tmp_path),
    )
    assert code == 2


def test_identity_gate_exit_code(tmp_path, capsys):
    code, _, err = run(
        capsys,
        "periodic", "--type", "B", "--rank", "2", "--p", "5",
        "--lmax", "2", "--cache-dir", str(tmp_path),
    )
    assert code == 4
    assert json.loads(err)["error"] == "identity"


def test_latex_and_csv_formats(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "kl", "--type", "A", "--rank", "1", "--w", "1",
        "--format", "latex", "--cache-dir", str(tmp_path),
    )
    assert code == 0 and out.startswith(r"\begin{tabular}")
    code, out, _ = run(
        capsys,
        "kl", "--type", "A", "--rank", "1", "--w", "1",
        "--format", "csv", "--cache-dir", str(tmp_path),
    )
    assert code == 0 and out.splitlines()[0] == "y,h"


def test_verify_command_passes(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "verify", "--type", "A", "--rank", "1", "--p", "5",
        "--cache-dir", str(tmp_path),
    )
    assert code == 0
    assert "FAIL" not in out
    # determinism across runs
    code2, out2, _ = run(
        capsys,
        "verify", "--type", "A", "--rank", "1", "--p", "5",
        "--cache-dir", str(tmp_path),
    )
    assert (code2, out2) == (code, out)
