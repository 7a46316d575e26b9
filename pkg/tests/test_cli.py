import pytest

from mightif import PointedContext, SemanticsMode, evaluate, parse, parse_model, world_mask
from mightif.cli import run

from helpers import EXAMPLE_TWO_MODEL


@pytest.fixture()
def model_file(tmp_path):
    path = tmp_path / "two.worlds"
    path.write_text("worlds 2\nval p: 0\nval q: 1\n")
    return str(path)


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_command(capsys):
    code, out, _ = run_capture(capsys, ["parse", "p & <>~p"])
    assert code == 0
    assert out.splitlines()[0] == "p & <>~p"
    assert "nodes: 5" in out


def test_parse_command_syntax_error(capsys):
    code, _, err = run_capture(capsys, ["parse", "p & "])
    assert code == 2
    assert "1:5" in err


def test_eval_command_two_world_example(capsys, model_file):
    code, out, _ = run_capture(capsys, [
        "eval", "--model", model_file, "--world", "0", "--state", "0,1",
        "--semantics", "km", "([]p | []~p) => q"])
    assert code == 1
    assert out.strip() == "false"
    code, out, _ = run_capture(capsys, [
        "eval", "--model", model_file, "--world", "0", "--state", "0,1",
        "--semantics", "yalcin", "([]p | []~p) => q"])
    assert code == 0
    assert out.strip() == "true"


def test_eval_command_empty_state(capsys, model_file):
    code, out, _ = run_capture(capsys, [
        "eval", "--model", model_file, "--world", "0", "--state", "",
        "--semantics", "yalcin", "[]bot"])
    assert code == 0
    assert out.strip() == "true"


def test_eval_command_missing_model(capsys, tmp_path):
    code, _, err = run_capture(capsys, [
        "eval", "--model", str(tmp_path / "nope"), "--world", "0",
        "--state", "", "--semantics", "yalcin", "p"])
    assert code == 3


def test_eval_command_bad_model(capsys, tmp_path):
    path = tmp_path / "bad.worlds"
    path.write_text("worlds 2\nval p: 7\n")
    code, _, err = run_capture(capsys, [
        "eval", "--model", str(path), "--world", "0", "--state", "",
        "--semantics", "yalcin", "p"])
    assert code == 3
    assert "model error" in err


def test_valid_command_km_contradiction(capsys):
    code, out, _ = run_capture(capsys, [
        "valid", "--semantics", "km", "(p & <>~p) => bot"])
    assert code == 0
    assert out.strip() == "VALID"


def test_valid_command_prints_machine_readable_countermodel(capsys):
    code, out, _ = run_capture(capsys, [
        "valid", "--semantics", "yalcin", "(p & <>~p) => bot"])
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "INVALID"
    world = int(next(l.split(":")[1] for l in lines if l.startswith("# world:")))
    state_text = next(l.split(":")[1] for l in lines if l.startswith("# state:"))
    state = world_mask(int(tok) for tok in state_text.split())
    model = parse_model("\n".join(lines[1:]))
    f = parse("(p & <>~p) => bot")
    assert not evaluate(model, PointedContext(world, state), f, SemanticsMode.YALCIN)


def test_theorem_command(capsys):
    code, out, _ = run_capture(capsys, ["theorem", "(p => q) -> (p => []q)"])
    assert code == 0
    assert out.strip() == "THEOREM"
    code, out, _ = run_capture(capsys, ["theorem", "(p => q) -> (q => p)"])
    assert code == 1
    assert out.splitlines()[0] == "NOT A THEOREM"


def test_consequence_command(capsys):
    code, out, _ = run_capture(capsys, ["consequence", "p | <>~p"])
    assert code == 0
    assert out.strip() == "YES"
    code, out, _ = run_capture(capsys, [
        "consequence", "--premise", "<>p", "p"])
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "NO"
    state_text = next(l.split(":")[1] for l in lines if l.startswith("# state:"))
    state = world_mask(int(tok) for tok in state_text.split())
    model = parse_model("\n".join(lines[1:]))
    from mightif import accepts
    assert accepts(model, state, parse("<>p"), SemanticsMode.YALCIN)
    assert not accepts(model, state, parse("p"), SemanticsMode.YALCIN)


def test_reduce_command(capsys):
    code, out, _ = run_capture(capsys, ["reduce", "p => q"])
    assert code == 0
    assert out.strip() == "[](~p | q)"


def test_nf_command(capsys):
    code, out, _ = run_capture(capsys, ["nf", "--form", "dnf", "[]p"])
    assert code == 0
    assert out.strip() == "~bot & []p"
    code, out, _ = run_capture(capsys, ["nf", "--form", "cnf", "<>p"])
    assert code == 0
    assert out.strip() == "bot | <>p"


def test_translate_command(capsys):
    code, out, _ = run_capture(capsys, ["translate", "--stats", "p => q"])
    assert code == 0
    lines = out.splitlines()
    translated = parse(lines[0])
    assert "input nodes:" in lines[1]
    assert "output nodes:" in lines[2]
    ctx = PointedContext(0, 0b11)
    assert evaluate(EXAMPLE_TWO_MODEL, ctx, translated, SemanticsMode.YALCIN) == \
        evaluate(EXAMPLE_TWO_MODEL, ctx, parse("p => q"), SemanticsMode.KM)


def test_depend_command(capsys, tmp_path):
    path = tmp_path / "dep.worlds"
    path.write_text("worlds 2\nval p1: 0 1\nval q: 0\n")
    code, out, _ = run_capture(capsys, [
        "depend", "--model", str(path), "--state", "0,1",
        "--target", "q", "--on", "p1"])
    assert code == 1
    assert out.strip() == "false"
    code, out, _ = run_capture(capsys, [
        "depend", "--model", str(path), "--state", "0",
        "--target", "q", "--on", "p1"])
    assert code == 0
    assert out.strip() == "true"


def test_bench_succinct_text_and_csv(capsys):
    code, out, _ = run_capture(capsys, ["bench-succinct", "--max-n", "3"])
    assert code == 0
    assert out.splitlines()[0].split() == ["n", "depend_nodes", "expo_nodes", "dagger_nodes"]
    code, out, _ = run_capture(capsys, ["bench-succinct", "--max-n", "3", "--csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,depend_nodes,expo_nodes,dagger_nodes"
    assert lines[3].endswith(",")  # dagger skipped for n=3


def test_bench_succinct_output_is_deterministic(capsys):
    _, first, _ = run_capture(capsys, ["bench-succinct", "--max-n", "4", "--csv"])
    _, second, _ = run_capture(capsys, ["bench-succinct", "--max-n", "4", "--csv"])
    assert first == second


def test_bench_succinct_plot(capsys, tmp_path):
    target = tmp_path / "growth.png"
    code, _, _ = run_capture(capsys, [
        "bench-succinct", "--max-n", "4", "--plot", str(target)])
    assert code == 0
    assert target.exists() and target.stat().st_size > 0


def test_oracle_check_equivalent(capsys):
    code, out, _ = run_capture(capsys, [
        "oracle-check", "--max-worlds", "3", "--atoms", "p,q",
        "p => <>q", "equiv", "[](p -> bot) | ~[](p -> ~q)"])
    assert code == 0
    assert out.strip() == "EQUIVALENT"


def test_oracle_check_differ(capsys):
    code, out, _ = run_capture(capsys, [
        "oracle-check", "--semantics", "km",
        "(p & <>~p) => bot", "equiv", "bot"])
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "DIFFER"
    parse_model("\n".join(lines[1:]))  # machine-readable block


def test_oracle_check_requires_equiv_keyword(capsys):
    code, _, err = run_capture(capsys, [
        "oracle-check", "p", "equals", "q"])
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert run(["no-such-command"]) == 2
    assert run([]) == 2
