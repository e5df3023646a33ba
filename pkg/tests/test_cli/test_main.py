import io

import pytest

from algorithms.cli.main import CliConfig, UsageError, build_parser, run
from algorithms.csp_lib.formats import parse_instance, serialize_instance
from algorithms.csp_lib.instance import Instance
from algorithms.instances.colouring import gen_kcoloring

V_TEXT = "pat 1\nvar x x1\nvar y y1 y2\npos x.x1 y.y1\npos x.x1 y.y2\n"


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write_instance(tmp_path):
    def write(instance, name="instance.bcsp"):
        path = tmp_path / name
        path.write_text(serialize_instance(instance), encoding="utf-8")
        return str(path)
    return write


class TestSolve:
    def test_unsat_exit_code(self, write_instance):
        code, out, _ = invoke("solve", write_instance(gen_kcoloring(4, 3)))
        assert code == 1
        assert out == "unsat\n"

    def test_construct(self, write_instance):
        path = write_instance(gen_kcoloring(3, 3))
        code, out, _ = invoke("solve", path, "--class", "oracle", "--construct")
        assert code == 0
        assert out == "sat\nx0=1\nx1=2\nx2=3\n"

    def test_class_solver(self, write_instance):
        code, out, _ = invoke("solve", write_instance(gen_kcoloring(3, 3)), "--class", "r5")
        assert (code, out) == (0, "sat\n")

    def test_r5_repair(self, write_instance):
        path = write_instance(gen_kcoloring(3, 3))
        code, out, _ = invoke("solve", path, "--class", "r5", "--construct", "--repair")
        assert code == 0
        assert out == "sat\nx0=3\nx1=2\nx2=1\n"

    def test_pattern_occurs(self, write_instance):
        code, out, err = invoke("solve", write_instance(gen_kcoloring(4, 3)), "--class", "q1")
        assert code == 2
        assert out == ""
        assert err.startswith("error: pattern Q1 occurs")

    def test_repair_needs_r5(self, write_instance):
        code, _, err = invoke("solve", write_instance(gen_kcoloring(3, 3)), "--repair", "--construct")
        assert code == 2
        assert "--repair" in err

    def test_missing_file(self, tmp_path):
        code, _, err = invoke("solve", str(tmp_path / "missing.bcsp"))
        assert code == 2
        assert err.startswith("error:")

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.bcsp"
        path.write_text("bcsp 1\nvar 1 1\n", encoding="utf-8")
        code, _, err = invoke("solve", str(path))
        assert code == 2
        assert "line 2" in err

    def test_unknown_option(self):
        assert invoke("solve", "--bogus")[0] == 2


class TestOccursAndClassify:
    def test_occurs(self, write_instance):
        code, out, _ = invoke("occurs", write_instance(gen_kcoloring(4, 3)), "--pattern", "T1")
        assert code == 0
        assert out.startswith("yes\nx.x1 -> x")

    def test_does_not_occur(self, write_instance):
        code, out, _ = invoke("occurs", write_instance(gen_kcoloring(3, 3)), "--pattern", "Q1")
        assert (code, out) == (1, "no\n")

    def test_pattern_file(self, write_instance, tmp_path):
        pat = tmp_path / "edge.pat"
        pat.write_text("pat 1\nvar x x1\nvar y y1\nneg x.x1 y.y1\n", encoding="utf-8")
        code, out, _ = invoke("occurs", write_instance(gen_kcoloring(2, 2)), "--pattern", str(pat))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "yes"
        assert lines[1].startswith("x.x1 -> x") and lines[2].startswith("y.y1 -> x")

    def test_pattern_file_flag(self, write_instance, tmp_path):
        pat = tmp_path / "edge.txt"
        pat.write_text("pat 1\nvar x x1\nvar y y1\nneg x.x1 y.y1\n", encoding="utf-8")
        code, out, _ = invoke("occurs", write_instance(gen_kcoloring(2, 2)), "--pattern-file", str(pat))
        assert code == 0
        assert out.splitlines()[0] == "yes"

    def test_needs_one_pattern_source(self, write_instance, tmp_path):
        path = write_instance(gen_kcoloring(2, 2))
        assert invoke("occurs", path)[0] == 2
        assert invoke("occurs", path, "--pattern", "T1", "--pattern-file", str(tmp_path / "p.pat"))[0] == 2

    def test_catalog_v_is_matched_with_injective_points(self, write_instance, tmp_path):
        # one allowed pair: V needs y1 and y2 on the same value
        path = write_instance(Instance([{1}, {1, 2}], {(0, 1): {(1, 1)}}))
        assert invoke("occurs", path, "--pattern", "V")[:2] == (1, "no\n")
        pat = tmp_path / "v.pat"
        pat.write_text(V_TEXT, encoding="utf-8")
        code, out, _ = invoke("occurs", path, "--pattern-file", str(pat))
        assert code == 0
        assert out.startswith("yes\n")
        assert invoke("--strict-points", "occurs", path, "--pattern-file", str(pat))[:2] == (1, "no\n")

    def test_unknown_pattern(self, write_instance):
        code, _, err = invoke("occurs", write_instance(gen_kcoloring(2, 2)), "--pattern", "R99")
        assert code == 2
        assert "unknown pattern" in err

    def test_classify(self, write_instance):
        code, out, _ = invoke("classify", write_instance(gen_kcoloring(4, 3)))
        assert code == 0
        assert out.endswith("solvers: oracle\n")


class TestPreprocess:
    def test_ac_with_trace(self, tmp_path):
        source = tmp_path / "chain.bcsp"
        source.write_text("bcsp 1\nvar 0 1 2\nvar 1 1 2\ncon 0 1 allow (1,2)\n", encoding="utf-8")
        target = tmp_path / "out.bcsp"
        code, out, err = invoke("preprocess", str(source), "--op", "ac", "--trace", "-o", str(target))
        assert code == 0
        assert out == ""
        assert err == "0 -> 1 : {1}\n1 -> 0 : {2}\n"
        assert parse_instance(target.read_text(encoding="utf-8")).domains == {0: frozenset({1}), 1: frozenset({2})}

    def test_ns_with_log(self, tmp_path):
        source = tmp_path / "ns.bcsp"
        source.write_text("bcsp 1\nvar 0 1 2\nvar 1 1 2\ncon 0 1 forbid (1,2)\n", encoding="utf-8")
        code, out, err = invoke("preprocess", str(source), "--op", "ns", "--log")
        assert code == 0
        assert err == "ns_removed x0=1 by 2\nns_removed x1=2 by 1\n"
        assert out == "bcsp 1\nvar 0 2\nvar 1 1\n"

    def test_default_is_sac(self, write_instance):
        code, out, _ = invoke("preprocess", write_instance(gen_kcoloring(3, 2)))
        assert code == 0
        assert parse_instance(out).has_empty_domain()


class TestGen:
    def test_kcol(self):
        code, out, _ = invoke("gen", "kcol", "--n", "4", "--q", "3")
        assert code == 0
        assert parse_instance(out) == gen_kcoloring(4, 3)

    def test_random_is_reproducible(self):
        first = invoke("gen", "random", "--n", "5", "--d", "3", "--seed", "9")
        second = invoke("gen", "random", "--n", "5", "--d", "3", "--seed", "9")
        assert first == second
        assert first[0] == 0

    def test_pad(self, write_instance):
        code, out, _ = invoke("gen", "pad", write_instance(gen_kcoloring(3, 3)), "--x", "0", "--y", "1", "--k", "2")
        assert code == 0
        assert len(parse_instance(out)) == 5

    def test_pad_needs_a_file(self):
        assert invoke("gen", "pad")[0] == 2

    def test_invalid_parameters(self):
        code, _, err = invoke("gen", "random", "--density", "2")
        assert code == 2
        assert "constraint_density" in err


class TestDraw:
    def test_pattern(self, tmp_path):
        target = tmp_path / "q1.png"
        assert invoke("draw", "--pattern", "Q1", "-o", str(target))[0] == 0
        assert target.stat().st_size > 0

    def test_instance(self, write_instance, tmp_path):
        target = tmp_path / "k3.png"
        assert invoke("draw", write_instance(gen_kcoloring(3, 2)), "-o", str(target))[0] == 0
        assert target.exists()

    def test_pattern_file(self, tmp_path):
        pat = tmp_path / "v.pat"
        pat.write_text(V_TEXT, encoding="utf-8")
        target = tmp_path / "v.png"
        assert invoke("draw", "--pattern-file", str(pat), "-o", str(target))[0] == 0
        assert target.stat().st_size > 0

    def test_needs_exactly_one_source(self, write_instance, tmp_path):
        target = str(tmp_path / "x.png")
        assert invoke("draw", "-o", target)[0] == 2
        assert invoke("draw", write_instance(gen_kcoloring(2, 2)), "--pattern", "Q1", "-o", target)[0] == 2


class TestConfig:
    def test_from_namespace(self):
        ns = build_parser().parse_args(["--jobs", "2", "solve", "a.bcsp", "--class", "t4"])
        config = CliConfig.from_namespace(ns)
        assert config.inputs == ["a.bcsp"]
        assert config.solver_class == "t4"
        assert config.jobs == 2

    def test_validate(self):
        with pytest.raises(UsageError):
            CliConfig("solve", ["a"], jobs=0).validate()
