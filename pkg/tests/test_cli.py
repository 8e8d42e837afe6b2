import json

from nagata import parse_poly2, parse_poly3
from nagata.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestAnalyze:
    def test_classical_map(self, capsys):
        code, doc, _ = invoke_json(capsys, "analyze", "x*z + y^2")
        assert code == 0
        assert doc["schema"] == 1
        assert doc["residual"] == "0"
        assert doc["jacobian_determinant"] == "1"
        assert doc["is_automorphism"] is True
        assert doc["representative"] == "t1"
        assert doc["classification"] == "WildAutomorphism"
        assert doc["lojasiewicz_exponent"] == "1/5"

    def test_non_automorphism_exits_one(self, capsys):
        code, doc, _ = invoke_json(capsys, "analyze", "x")
        assert code == 1
        assert doc["residual"] == "-2*y"
        assert doc["is_automorphism"] is False
        assert doc["representative"] is None
        assert doc["classification"] == "NotAutomorphism"

    def test_json_polynomials_round_trip(self, capsys):
        _, doc, _ = invoke_json(capsys, "analyze", "(x*z+y^2)^2 - 3*z")
        phi = parse_poly3(doc["phi"])
        assert phi == parse_poly3("(x*z+y^2)^2 - 3*z")
        assert parse_poly3(doc["residual"]) == 0
        from nagata import decompose, inverse_nagata

        p = decompose(phi)
        assert parse_poly2(doc["representative"]) == p
        inverse = inverse_nagata(p)
        assert parse_poly3(doc["inverse"]["f"]) == inverse.f
        assert parse_poly3(doc["inverse"]["g"]) == inverse.g

    def test_human_output_mentions_all_fields(self, capsys):
        code, out, _ = invoke(capsys, "analyze", "x*z + y^2")
        assert code == 0
        for needle in ("residual: 0", "jacobian determinant: 1",
                       "automorphism: yes", "representative p: t1",
                       "classification: WildAutomorphism",
                       "lojasiewicz exponent: 1/5"):
            assert needle in out


class TestVerdictSubcommands:
    def test_decompose_present(self, capsys):
        code, doc, _ = invoke_json(capsys, "decompose", "z^4")
        assert code == 0
        assert doc["representative"] == "t2^4"

    def test_decompose_absent(self, capsys):
        code, doc, _ = invoke_json(capsys, "decompose", "x")
        assert code == 1
        assert doc["representative"] is None

    def test_classify_wild(self, capsys):
        code, doc, _ = invoke_json(capsys, "classify", "x*z + y^2")
        assert code == 0
        assert doc["verdict"] == "WildAutomorphism"
        assert doc["evidence"]["leading_form_t1_derivative"] == "1"

    def test_classify_tame_includes_factors(self, capsys):
        code, doc, _ = invoke_json(capsys, "classify", "z^3")
        assert code == 0
        assert doc["verdict"] == "TameAutomorphism"
        assert len(doc["evidence"]["tame_factors"]) == 2

    def test_classify_non_automorphism(self, capsys):
        code, doc, _ = invoke_json(capsys, "classify", "y")
        assert code == 1
        assert doc["evidence"]["residual"] == "z"


class TestAlgebraSubcommands:
    def test_invert(self, capsys):
        code, doc, _ = invoke_json(capsys, "invert", "t1")
        assert code == 0
        from nagata import T1, inverse_nagata

        inverse = inverse_nagata(T1)
        assert parse_poly3(doc["inverse"]["f"]) == inverse.f

    def test_compose_map_with_inverse(self, capsys):
        nagata_triple = ("x - 2*y*(x*z+y^2) - z*(x*z+y^2)^2,"
                         " y + z*(x*z+y^2), z")
        inverse_triple = ("x + 2*y*(x*z+y^2) - z*(x*z+y^2)^2,"
                          " y - z*(x*z+y^2), z")
        code, doc, _ = invoke_json(capsys, "compose", nagata_triple, inverse_triple)
        assert code == 0
        assert doc["result"] == {"f": "x", "g": "y", "h": "z"}

    def test_basis(self, capsys):
        code, out, _ = invoke(capsys, "basis", "2")
        assert code == 0
        assert out.splitlines() == ["y^2 + x*z", "z^2"]

    def test_oracle(self, capsys):
        code, doc, _ = invoke_json(capsys, "oracle", "4")
        assert code == 0
        assert doc["dimension"] == 3
        assert doc["verified"] is True
        assert len(doc["kernel_basis"]) == 3

    def test_loj_single(self, capsys):
        code, doc, _ = invoke_json(capsys, "loj", "t1")
        assert code == 0
        assert doc["exponent"] == "1/5"
        assert doc["inverse_degree"] == 5

    def test_loj_pair(self, capsys):
        code, doc, _ = invoke_json(capsys, "loj", "t1", "t1 + t2^5")
        assert code == 0
        assert doc["base"]["exponent"] == "1/5"
        assert doc["deformed"]["exponent"] == "1/11"
        assert doc["monotone"] is True


class TestErrorsAndReproducibility:
    def test_parse_error_exits_two(self, capsys):
        code, _, err = invoke(capsys, "analyze", "x + (")
        assert code == 2
        assert "position 5" in err

    def test_unknown_identifier_exits_two(self, capsys):
        code, _, err = invoke(capsys, "analyze", "t1")
        assert code == 2
        assert "t1" in err

    def test_loj_support_violation_exits_two(self, capsys):
        code, _, err = invoke(capsys, "loj", "t1", "t2")
        assert code == 2
        assert "support" in err

    def test_oracle_bound_exits_two(self, capsys):
        code, _, err = invoke(capsys, "oracle", "13")
        assert code == 2
        assert "bound" in err

    def test_unknown_subcommand_exits_two(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_random_is_seed_reproducible(self, capsys):
        code1, out1, _ = invoke(capsys, "random", "--dvmax", "6", "--seed", "42", "--json")
        code2, out2, _ = invoke(capsys, "random", "--dvmax", "6", "--seed", "42", "--json")
        assert code1 == code2 == 0
        assert out1 == out2
        doc = json.loads(out1)
        assert doc["analysis"]["is_automorphism"] is True

    def test_random_different_seeds_differ(self, capsys):
        _, out1, _ = invoke(capsys, "random", "--seed", "1")
        _, out2, _ = invoke(capsys, "random", "--seed", "2")
        assert out1 != out2
