import csv
import io
import json

from bihooks.cli import main
from bihooks.fock import canonical_basis
from bihooks.render import (
    matrix_csv, matrix_json_obj, verdict_from_obj, verdict_obj, verdict_text,
)
from bihooks.structure import predict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_structure_text(capsys):
    code, out = run(capsys, "structure", "--e", "3", "--p", "0",
                    "--k", "7", "--j", "5")
    assert code == 0
    assert "decomposable" in out
    for piece in ("D(33,1|2)<5>", "D(21,13|2)<5>", "D(36|-)<5>"):
        assert piece in out


def test_structure_json_round_trip(capsys):
    code, out = run(capsys, "structure", "--e", "2", "--p", "2",
                    "--k", "2", "--j", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["verdict"] == "indecomposable"
    assert obj["summands"][0]["type"] == "diagram"
    assert verdict_from_obj(obj) == predict(2, 2, 2, 2)


def test_uniserial_text_socle_leftmost(capsys):
    code, out = run(capsys, "structure", "--e", "2", "--p", "2",
                    "--k", "3", "--j", "1")
    assert code == 0
    assert "D(8|-)<1> | D(6,1|1)<1> | D(8|-)<1>" in out


def test_decomposable(capsys):
    code, out = run(capsys, "decomposable", "--k", "4", "--j", "1", "--p", "2")
    assert (code, out.strip()) == (0, "decomposable")
    code, out = run(capsys, "decomposable", "--k", "1", "--j", "2", "--p", "3")
    assert (code, out.strip()) == (0, "indecomposable")


def test_llt_csv_and_json(tmp_path, capsys):
    code, out = run(capsys, "llt", "--e", "2", "--n", "2",
                    "--cache-dir", str(tmp_path))
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["row", "column", "entry"]
    assert ["2|-", "2|-", "1"] in rows
    code, out = run(capsys, "llt", "--e", "2", "--n", "4", "--rows", "bihooks",
                    "--format", "json", "--cache-dir", str(tmp_path))
    obj = json.loads(out)
    assert obj["e"] == 2 and obj["n"] == 4 and obj["convention"] == "above"
    assert ["2|2", "4|-", [[1, 1]]] in obj["entries"]
    # bihook filter drops rows like ((2,1),(1))... the row labels are bihooks
    from bihooks.partitions import is_bihook, parse_bipartition
    assert all(is_bihook(parse_bipartition(lam)) for lam, _, _ in obj["entries"])


def test_qdim(capsys):
    code, out = run(capsys, "qdim", "--shape", "2|2", "--e", "2")
    assert (code, out.strip()) == (0, "q^-1 + 4*q + q^3")
    code, out = run(capsys, "qdim", "--shape", "2|2", "--e", "2",
                    "--word", "0,0,1,1")
    assert (code, out.strip()) == (0, "q^-1 + 2*q + q^3")


def test_label_maps(capsys):
    code, out = run(capsys, "mullineux", "--e", "3", "--shape", "15|-")
    assert (code, out.strip()) == (0, "8,7|-")
    code, out = run(capsys, "induce", "--e", "4", "--a", "2", "--b", "1",
                    "--shape", "4|4")
    assert (code, out.strip()) == (0, "6,1|6,1")
    code, out = run(capsys, "induce", "--e", "4", "--a", "2", "--b", "1",
                    "--negate", "--shape", "1,1,1,1|1,1,1,1")
    assert (code, out.strip()) == (0, "2,1,1,1,1,1|2,1,1,1,1,1")
    code, out = run(capsys, "braces", "--e", "3", "--shape", "9,4|2")
    assert (code, out.strip()) == (0, "5,4,2,2|1,1")


def test_schur_commands(capsys):
    code, out = run(capsys, "decompnum", "--n", "10", "--m", "2", "--j", "0",
                    "--p", "3")
    assert (code, out.strip()) == (0, "1")
    code, out = run(capsys, "henke", "--n", "10", "--j", "3", "--p", "3")
    assert code == 0
    assert out.splitlines() == ["10,0: no", "9,1: yes", "8,2: no", "7,3: yes"]
    code, out = run(capsys, "summands", "--k", "4", "--j", "2", "--p", "2")
    assert (code, out.strip()) == (0, "2")
    code, out = run(capsys, "factors", "--k", "7", "--j", "3", "--p", "3",
                    "--format", "json")
    data = json.loads(out)
    assert {"factor": "1,1,1,1,1,1,1,1,1,1", "multiplicity": 2} in data


def test_verify_command(capsys):
    code, out = run(capsys, "verify", "--suite", "words", "--max-kj", "3",
                    "--max-n", "4")
    assert code == 0
    assert "suite words" in out and "ok" in out


def test_error_paths(capsys):
    code = main(["structure", "--e", "1", "--p", "0", "--k", "1", "--j", "1"])
    assert code == 2
    code = main(["structure", "--e", "3", "--p", "6", "--k", "1", "--j", "1"])
    assert code == 2
    # shapes with an empty first component need the --shape=-|1 form
    code = main(["mullineux", "--e", "2", "--shape=-|1"])
    assert code == 2


def test_verdict_json_round_trip_across_cases():
    cases = [
        predict(7, 5, 3, 0),
        predict(3, 1, 2, 2),
        predict(2, 2, 2, 2),
        predict(7, 3, 3, 3),
        predict(6, 3, 2, 3),
        predict(1, 2, 3, 0),
        predict(2, 1, 3, 0, a=1, b=1, transpose=True),
    ]
    for verdict in cases:
        assert verdict_from_obj(json.loads(
            json.dumps(verdict_obj(verdict)))) == verdict
        assert verdict_text(verdict)


def test_matrix_emitters_agree(tmp_path):
    matrix = canonical_basis(4, 2, cache_dir=str(tmp_path))
    text = matrix_csv(matrix)
    obj = matrix_json_obj(matrix)
    assert len(text.strip().splitlines()) - 1 == len(obj["entries"])
