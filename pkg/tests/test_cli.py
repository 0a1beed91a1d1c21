import pytest

from sufread import derive, derive_smallest, language_equiv, minimize, parse, serialize
from sufread.catalog import (ends_aa_loop_b, ends_ab_loop_a, nonunique_dfa, nonunique_first,
                             nonunique_second, panic_dfa, sigma_star_aab, two_patterns_dfa)
from sufread.cli import main
from sufread.hardness import Graph


@pytest.fixture
def files(tmp_path):
    items = {
        "waiter.dsa": sigma_star_aab(),
        "first.dsa": nonunique_first(),
        "second.dsa": nonunique_second(),
        "nonunique.dfa": nonunique_dfa(),
        "loop_b.dfa": ends_aa_loop_b(),
        "loop_a.dfa": ends_ab_loop_a(),
        "matcher.dfa": two_patterns_dfa(),
        "panic.dfa": panic_dfa(),
        "tri.graph": Graph(("u", "v", "w"), (("u", "v"), ("v", "w"), ("u", "w"))),
    }
    out = {}
    for name, x in items.items():
        path = tmp_path / name
        path.write_text(serialize(x))
        out[name] = str(path)
    return out


def call(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_equiv_of_two_minima(files, capsys):
    code, out, _ = call(capsys, "equiv", files["first.dsa"], files["second.dsa"])
    assert code == 0 and out.strip() == "equivalent"


def test_equiv_counterexample(files, capsys):
    code, out, _ = call(capsys, "equiv", files["waiter.dsa"], files["first.dsa"])
    assert code == 1 and "counterexample" in out


def test_run_trace(files, capsys):
    code, out, _ = call(capsys, "run", files["waiter.dsa"], "baabaa", "--chars")
    assert code == 0
    assert out.splitlines()[0].startswith("q0 --aab--> q3")
    assert out.splitlines()[-1] == "reject (residue: aa)"
    code, out, _ = call(capsys, "run", files["waiter.dsa"], "a a b")
    assert out.splitlines()[-1] == "accept"


def test_derive_refuses_with_witness(files, capsys):
    code, _, err = call(capsys, "derive", files["loop_b.dfa"], "--states", "q0,q2")
    assert code == 1
    assert len(err.strip().splitlines()) == 1
    assert "q1 --b--> q1" in err


def test_derive_matches_library(files, capsys):
    code, out, _ = call(capsys, "derive", files["loop_a.dfa"], "--states", "q0,q2")
    assert code == 0
    assert out == serialize(derive(ends_ab_loop_a(), ["q0", "q2"]))


def test_derive_force(files, capsys):
    code, out, _ = call(capsys, "derive", files["loop_b.dfa"], "--states", "q0,q2", "--force")
    assert code == 0 and out.startswith("# forced:")
    assert not language_equiv(parse(out).payload, ends_aa_loop_b())


def test_derive_smallest_matches_library(files, capsys):
    code, out, _ = call(capsys, "derive-smallest", files["matcher.dfa"])
    assert code == 0
    assert parse(out).payload == derive_smallest(two_patterns_dfa()).dsa


def test_minimize_matches_library(files, capsys):
    code, out, _ = call(capsys, "minimize", files["matcher.dfa"])
    assert parse(out).payload == minimize(two_patterns_dfa())[0]


def test_minimize_strong_panic(files, capsys):
    code, out, _ = call(capsys, "minimize-strong", files["panic.dfa"])
    assert code == 0 and "edge: q0 p p -> q3" in out


def test_brute_min(files, capsys):
    code, out, _ = call(capsys, "brute-min", files["nonunique.dfa"], "--max-total", "8", "--all")
    assert code == 0 and out.startswith("# minimum total: 8")
    assert out.count("type: dsa") == 2
    code, out, _ = call(capsys, "brute-min", files["nonunique.dfa"], "--max-total", "7")
    assert out.startswith("no equivalent DSA with total <= 7")


def test_sts_and_size(files, capsys):
    code, out, _ = call(capsys, "sts", files["loop_a.dfa"])
    assert "{q0, q2}" in out.splitlines()[0]
    code, out, _ = call(capsys, "size", files["waiter.dsa"])
    assert out.strip() == "states=2 edges=2 label_len=6 total=10"


def test_gen_vc_header(files, capsys):
    code, out, _ = call(capsys, "gen-vc", files["tri.graph"], "--theta", "2", "--k-prime", "2")
    assert out.splitlines()[:3] == ["# theta: 2", "# k': 2", "# k: 19"]
    assert parse(out).kind == "dfa"


def test_formats(files, capsys):
    code, out, _ = call(capsys, "to-dfa", files["waiter.dsa"], "--format", "dot")
    assert out.startswith("digraph")
    code, out, _ = call(capsys, "--format", "dot", "complete", files["nonunique.dfa"])
    assert out.startswith("digraph")
    code, out, _ = call(capsys, "dot", files["tri.graph"])
    assert out.startswith("graph")


def test_random_is_seeded(capsys):
    _, a, _ = call(capsys, "random", "dfa", "--seed", "4")
    _, b, _ = call(capsys, "random", "dfa", "--seed", "4")
    assert a == b and a.startswith("type: dfa")


def test_domain_and_usage_errors(files, capsys, tmp_path):
    code, _, err = call(capsys, "validate", str(tmp_path / "missing.dsa"))
    assert code == 1 and err.startswith("sufread: error:")
    bad = tmp_path / "bad.dsa"
    bad.write_text("type: dsa\nalphabet: a\n")
    code, _, err = call(capsys, "validate", str(bad))
    assert code == 1 and ":1:" in err
    code, _, err = call(capsys, "--cap", "2", "derive-smallest", files["matcher.dfa"])
    assert code == 1 and "cap" in err
    with pytest.raises(SystemExit) as info:
        main(["brute-min", files["nonunique.dfa"]])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
