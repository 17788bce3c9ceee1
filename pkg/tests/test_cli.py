import pytest

from symground.cli import main
from symground.grounding import data_root

DATA = data_root()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def path(*parts):
    return str(DATA.joinpath(*parts))


def test_parse(capsys):
    code, out, _ = run(capsys, "parse", "--dict", path("dictionaries", "cat-snake.dict"),
                       "--sentence", "the cat chased a snake")
    assert code == 0 and "(2 4 O)" in out


def test_parse_without_linkage(capsys):
    code, _, err = run(capsys, "parse", "--dict", path("dictionaries", "cat-snake.dict"),
                       "--sentence", "cat the chased")
    assert code == 1 and "no linkage" in err


def test_relex(capsys):
    code, out, _ = run(capsys, "relex", "--dict", path("dictionaries", "cat-snake.dict"),
                       "--sentence", "the cat chased a snake")
    assert code == 0 and "_subj(chase, cat)" in out


def test_comprehend_and_ground(capsys):
    code, out, _ = run(capsys, "comprehend", "--bundle", "extended-rcc-allen", "--sentence", "Jack partially overlaps Jill")
    assert code == 0 and "overlaps@1" in out
    code, out, _ = run(capsys, "ground", "--bundle", "extended-rcc-allen", "--sentence", "Jack partially overlaps Jill")
    assert (code, out) == (0, "rcc8 Jack Jill {PO}\n")


def test_ground_from_atom_file(capsys, tmp_path):
    f = tmp_path / "atoms.scm"
    f.write_text('(EvaluationLink (PredicateNode "equal") (ListLink (ConceptNode "region-1") (ConceptNode "region-2")))')
    code, out, _ = run(capsys, "ground", "--bundle", "minimal-rcc", "--atoms", str(f))
    assert (code, out) == (0, "rcc8 region-1 region-2 {EQ}\n")


def test_generate_from_network(capsys, tmp_path):
    net = tmp_path / "net.txt"
    net.write_text("region-4 region-5 {EQ}\n")
    code, out, _ = run(capsys, "generate", "--bundle", "minimal-rcc", "--net", str(net), "--limit", "1")
    assert (code, out) == (0, "Region 4 is equal to Region 5\n")


def test_express_scene(capsys):
    code, out, _ = run(capsys, "express", "--bundle", "extended-rcc-allen", "--scene", path("scenes", "patterns.scene"))
    assert code == 0 and "externally_connected" in out


def test_roundtrip(capsys):
    code, out, _ = run(capsys, "roundtrip", "--bundle", "minimal-rcc", "--corpus", path("corpus", "minimal-rcc.txt"))
    assert code == 0 and out.count("PASS") == 7 and "FAIL" not in out


def test_scene_check(capsys):
    code, out, _ = run(capsys, "scene-check", "--grammar", path("grammars", "face.dict"),
                       "--scene", path("scenes", "face.scene"))
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "scene-check", "--grammar", path("grammars", "face.dict"),
                       "--scene", path("scenes", "face-no-nose.scene"))
    assert code == 1 and "unsatisfied connector" in out


def test_action_check(capsys):
    code, _, _ = run(capsys, "action-check", "--grammar", path("grammars", "kick.dict"), "--trace", path("traces", "kick.trace"))
    assert code == 0
    code, _, _ = run(capsys, "action-check", "--grammar", path("grammars", "kick.dict"),
                     "--trace", path("traces", "kick-gapped.trace"))
    assert code == 1
    code, out, _ = run(capsys, "action-check", "--grammar", path("grammars", "piano.dict"),
                       "--trace", path("traces", "piano.trace"), "--no-cross",
                       "--links", path("traces", "piano-shoulders.links"))
    assert code == 1 and "no-cross: links cross" in out


def test_reason(capsys, tmp_path):
    net = tmp_path / "net.txt"
    net.write_text("a b {before}\nb c {before}\n")
    code, out, _ = run(capsys, "reason", "--net", str(net))
    assert code == 0 and "a c {before}" in out
    net.write_text("a b {before}\nb c {before}\nc a {before}\n")
    code, out, _ = run(capsys, "reason", "--net", str(net))
    assert (code, out) == (1, "INCONSISTENT\n")


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--algebra", "allen")
    assert code == 0 and len(out.splitlines()) == 14


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "--bundle", "perception-action", "--trace", path("traces", "smile-at-bob.trace"))
    assert code == 0 and "Smiling is during looking at Bob" in out


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["parse", "--sentence", "x"], ["reason", "--net", "/no/such/file"],
                                  ["ground", "--bundle", "no-such-bundle", "--sentence", "x"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_comprehension_failure_is_domain_error(capsys):
    code, _, err = run(capsys, "comprehend", "--bundle", "minimal-rcc", "--sentence", "Region is equal")
    assert code == 1 and err.startswith("error:")
