import json
import subprocess
import sys

import pytest

from chromaposet.cli import main, parse_graph_spec, UsageError
from chromaposet.graph import make_cycle, make_lollipop, make_path
from chromaposet.suites import DIAMOND


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CHROMAPOSET_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


def terms(text):
    return sorted(t.strip() for t in text.split(" + "))


def test_csf_examples(capsys):
    assert run(capsys, "csf", "path:3") == (0, "m[2,1] + 6 m[1,1,1]\n", "")
    assert run(capsys, "csf", "complete:4", "--basis", "e")[1] == "24 e[4]\n"
    code, out, _ = run(capsys, "csf", "cycle:4", "--basis", "s")
    assert code == 0
    # same terms as the documented example; terms print in reverse lexicographic order
    assert terms(out) == terms("14 s[1,1,1,1] + 2 s[2,1,1] + 2 s[2,2]")
    assert out == "2 s[2,2] + 2 s[2,1,1] + 14 s[1,1,1,1]\n"


def test_graph_spec_forms():
    assert parse_graph_spec("lollipop:4,3") == make_lollipop(4, 3)
    assert parse_graph_spec("edges:3; 0-1, 1-2") == make_path(3)
    assert parse_graph_spec(f"g6:{DIAMOND.graph6()}") == DIAMOND
    assert parse_graph_spec("unit:2,3,4") == make_path(4)
    for bad in ("lollipop", "blob:3", "path:1,2", "g6:!!", "cycle:2", "edges:2; 0-5"):
        with pytest.raises(UsageError):
            parse_graph_spec(bad)


@pytest.mark.parametrize("argv,code", [
    (["csf", "nonsense"], 2),
    (["csf", "path:x"], 2),
    (["csf", "complete:11"], 3),
    (["poset", "--n", "8"], 3),
    (["poset", "--n", "1"], 3),
    (["verify", "no-such-suite"], 2),
    (["verify", "conjecture", "--n", "9"], 3),
    (["csf", "path:3", "--basis", "q"], 2),
])
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code
    assert capsys.readouterr().err


def test_poset_dot_on_four_vertices(capsys):
    code, out, _ = run(capsys, "poset", "--n", "4", "--order", "e")
    assert code == 0
    assert out.count("[label=") == 6


def test_poset_single_node(capsys):
    out = run(capsys, "poset", "--n", "2", "--format", "json")[1]
    data = json.loads(out)
    assert len(data["elements"]) == 1 and data["covers"] == []


def test_poset_s_order_has_diamond_below_cycle(capsys):
    data = json.loads(run(capsys, "poset", "--n", "4", "--order", "s", "--format", "json")[1])
    index = {e["graph6"]: e["index"] for e in data["elements"]}
    assert [index[DIAMOND.canonical().graph6()], index[make_cycle(4).canonical().graph6()]] in data["covers"]


def test_poset_writes_several_formats(capsys, tmp_path):
    out = tmp_path / "out"
    code = main(["poset", "--n", "4", "--format", "dot", "--format", "csv",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    assert sorted(p.name for p in out.iterdir()) == ["e4.csv", "e4.dot", "e4.json"]


def test_poset_single_file(tmp_path):
    target = tmp_path / "s5.csv"
    assert main(["poset", "--n", "5", "--order", "s", "--format", "csv", "--out", str(target)]) == 0
    assert len(target.read_text().splitlines()) == 21


def test_cache_is_written_and_reused(capsys, isolated_cache):
    first = run(capsys, "poset", "--n", "5", "--format", "csv")[1]
    cache_file = isolated_cache / "csf-n5-v1.json"
    data = json.loads(cache_file.read_text())
    assert data["version"] == 1 and len(data["table"]) == 21
    assert run(capsys, "poset", "--n", "5", "--format", "csv")[1] == first
    cache_file.write_text("not json")
    assert run(capsys, "poset", "--n", "5", "--format", "csv")[1] == first


def test_cache_dir_flag_and_no_cache(capsys, tmp_path, isolated_cache):
    explicit = tmp_path / "explicit"
    run(capsys, "poset", "--n", "4", "--cache-dir", str(explicit))
    assert (explicit / "csf-n4-v1.json").exists()
    run(capsys, "poset", "--n", "3", "--no-cache")
    assert not (isolated_cache / "csf-n3-v1.json").exists()


def test_jobs_do_not_change_output(capsys):
    one = run(capsys, "poset", "--n", "5", "--no-cache", "--jobs", "1", "--format", "json")[1]
    two = run(capsys, "poset", "--n", "5", "--no-cache", "--jobs", "2", "--format", "json")[1]
    assert one == two


def test_verify_reports(capsys):
    code, out, err = run(capsys, "verify", "stars", "--n", "5")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "stars" and report["passed"]
    assert err.startswith("PASS stars")
    code, out, _ = run(capsys, "verify", "lollipop-chain", "--N", "6", "--order", "s")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_is_deterministic(capsys):
    a = run(capsys, "verify", "conjecture", "--n", "5")[1]
    b = run(capsys, "verify", "conjecture", "--n", "5")[1]
    assert a == b


def test_verify_failure_exit_code(capsys, monkeypatch):
    from chromaposet import suites
    from chromaposet.chromposet import CheckReport

    def broken(n=None, order=None):
        return [CheckReport("broken", False, None, n, [{"graph6": "C~"}])]

    monkeypatch.setitem(suites.SUITES, "stars", (broken, ("n",)))
    code, out, err = run(capsys, "verify", "stars", "--n", "5")
    assert code == 1
    assert json.loads(out)["counterexamples"][0]["items"] == [{"graph6": "C~"}]
    assert err.startswith("FAIL")


def test_module_entry_point(capsys):
    proc = subprocess.run([sys.executable, "-m", "chromaposet", "csf", "star:4", "--basis", "e"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == run(capsys, "csf", "star:4", "--basis", "e")[1]
    # the claw is not e-positive
    assert " - " in proc.stdout
