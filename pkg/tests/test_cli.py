"""Command-line behavior: canonical output, exit codes, round-trips and
byte determinism across parallelism settings."""

import json

import pytest

from kostka_forge.cli import (
    EXIT_INTEGRALITY,
    EXIT_NOT_IN_SPAN,
    EXIT_OK,
    EXIT_VALIDATION,
    EXIT_VERIFY_FAILED,
    main,
)
from kostka_forge.macdonald import KostkaMatrix, nonsym_E
from kostka_forge.qt import ExactScalar
from kostka_forge.zpoly import ZPolynomial


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_trivial_form(self, capsys):
        code, out, _ = run(capsys, "expand", "--n", "2", "--lambda", "0,0", "--form", "E")
        assert code == EXIT_OK
        payload = json.loads(out)
        f = ZPolynomial.from_json_dict(payload["polynomial"])
        assert f == ZPolynomial.one(2)

    def test_monomial_round_trip(self, capsys):
        code, out, _ = run(capsys, "expand", "--n", "2", "--lambda", "1,0", "--form", "E")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert ZPolynomial.from_json_dict(payload["polynomial"]) == nonsym_E((1, 0))

    def test_augmented_expansion_values(self, capsys):
        code, out, _ = run(
            capsys,
            "expand", "--n", "2", "--lambda", "1,0",
            "--form", "calE", "--basis", "tmon-aug", "--m", "1",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["labels"] == [[0, 1], [1, 0]]
        coeffs = [ExactScalar.from_json(c) for c in payload["coeffs"]]
        qt = ExactScalar.q() * ExactScalar.t()
        assert coeffs == [qt, ExactScalar.one() - qt]
        assert payload["integral"] == [True, True]

    def test_canonical_json_shape(self, capsys):
        _, out, _ = run(capsys, "expand", "--n", "2", "--lambda", "1,0", "--form", "E")
        assert out.endswith("\n")
        assert out == json.dumps(json.loads(out), sort_keys=True, separators=(",", ":")) + "\n"

    def test_latex_output(self, capsys):
        code, out, _ = run(
            capsys,
            "expand", "--n", "2", "--lambda", "0,1",
            "--form", "calE", "--format", "latex",
        )
        assert code == EXIT_OK
        assert "z_{2}" in out


class TestValidation:
    def test_bad_lambda(self, capsys):
        code, _, err = run(capsys, "expand", "--n", "2", "--lambda", "1,x", "--form", "E")
        assert code == EXIT_VALIDATION
        assert json.loads(err)["error"]["type"] == "ValidationError"

    def test_wrong_length(self, capsys):
        code, _, _ = run(capsys, "expand", "--n", "3", "--lambda", "1,0", "--form", "E")
        assert code == EXIT_VALIDATION

    def test_j_needs_partition(self, capsys):
        code, _, _ = run(capsys, "expand", "--n", "2", "--lambda", "0,1", "--form", "calJ")
        assert code == EXIT_VALIDATION

    def test_kostka_needs_enough_variables(self, capsys):
        code, _, _ = run(capsys, "kostka", "--degree", "3", "--n", "2")
        assert code == EXIT_VALIDATION

    def test_not_in_span(self, capsys):
        code, _, err = run(
            capsys,
            "expand", "--n", "2", "--lambda", "0,1",
            "--form", "calE", "--basis", "tmon-aug", "--m", "0",
        )
        assert code == EXIT_NOT_IN_SPAN
        assert json.loads(err)["error"]["type"] == "NotInSpan"


class TestKostka:
    def test_degree_two_csv(self, capsys):
        code, out, _ = run(capsys, "kostka", "--degree", "2", "--format", "csv")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == ",20,11"
        assert lines[1] == "20,1,q"
        assert lines[2] == "11,t,1"

    def test_schur_specialization(self, capsys):
        code, out, _ = run(
            capsys,
            "kostka", "--degree", "3", "--n", "3",
            "--specialize", "q=0,t=0", "--format", "csv",
        )
        assert code == EXIT_OK
        rows = [line.split(",")[1:] for line in out.strip().split("\n")[1:]]
        size = len(rows)
        for i in range(size):
            for j in range(size):
                assert rows[i][j] == ("1" if i == j else "0")

    def test_integrality_exit_code(self, capsys, monkeypatch):
        bad = KostkaMatrix(1, 1, [(1,)])
        bad.entries = [[ExactScalar.one() / (ExactScalar.one() - ExactScalar.t())]]
        monkeypatch.setattr("kostka_forge.cli.kostka_matrix", lambda d, n: bad)
        code, _, err = run(capsys, "kostka", "--degree", "1", "--n", "1")
        assert code == EXIT_INTEGRALITY
        assert json.loads(err)["error"]["type"] == "IntegralityViolation"


class TestVerify:
    def test_passing_suite(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--suite", "hecke-relations",
            "--n", "2", "--trials", "5", "--seed", "7",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["passed"] is True
        assert report["options"]["seed"] == 7

    def test_unknown_suite(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "no-such-suite")
        assert code == EXIT_VALIDATION

    def test_failing_suite_exit_code(self, capsys, monkeypatch):
        def broken(n=3, maxdeg=4, seed=0, trials=None):
            return [{"name": "always_fails", "passed": False, "detail": ""}]

        from kostka_forge import verify as verify_mod

        monkeypatch.setitem(verify_mod.SUITES, "hecke-relations", broken)
        code, out, _ = run(capsys, "verify", "--suite", "hecke-relations")
        assert code == EXIT_VERIFY_FAILED
        assert json.loads(out)["passed"] is False


class TestDeterminism:
    def test_table_bytes_stable_across_parallelism(self, tmp_path):
        paths = [tmp_path / f"t{i}.json" for i in range(3)]
        assert main(["table", "--n", "2", "--maxdeg", "3", "--output", str(paths[0])]) == 0
        assert main(
            ["table", "--n", "2", "--maxdeg", "3", "--parallel", "2", "--output", str(paths[1])]
        ) == 0
        assert main(
            ["table", "--n", "2", "--maxdeg", "3", "--parallel", "4", "--output", str(paths[2])]
        ) == 0
        blobs = [p.read_bytes() for p in paths]
        assert blobs[0] == blobs[1] == blobs[2]

    def test_env_var_parallelism(self, tmp_path, monkeypatch):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["table", "--n", "2", "--maxdeg", "2", "--output", str(a)]) == 0
        monkeypatch.setenv("KOSTKA_FORGE_THREADS", "3")
        assert main(["table", "--n", "2", "--maxdeg", "2", "--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_kostka_bytes_stable(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["kostka", "--degree", "3", "--n", "3", "--output", str(a)]) == 0
        assert main(
            ["kostka", "--degree", "3", "--n", "3", "--parallel", "2", "--output", str(b)]
        ) == 0
        assert a.read_bytes() == b.read_bytes()
