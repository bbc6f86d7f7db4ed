import pytest
from click.testing import CliRunner

from mawdist import DistanceMatrix, build_matrix, load_beta_globin
from mawdist.cli import cli
from mawdist.fasta import format_fasta
from mawdist.pipeline import RunConfig, run_pipeline
from mawdist.alphabet import SequenceInputError
from reference_tables import DELTA, upper_triangle


@pytest.fixture
def fixture_path(tmp_path):
    p = tmp_path / "beta_globin_exon1.fasta"
    p.write_text(format_fasta(load_beta_globin()))
    return p


def run(*args):
    return CliRunner().invoke(cli, [str(a) for a in args], catch_exceptions=False)


def test_maw_listing(tmp_path):
    p = tmp_path / "v.fa"
    p.write_text(">v\nabaabab\n>w\nab\n")
    res = run("maw", p)
    assert res.exit_code == 0
    assert res.output == ">v\nBB\nAAA\nBABA\nAABAA\n>w\nAA\nBA\nBB\n"


def test_maw_explicit_alphabet_and_maxlen(tmp_path):
    p = tmp_path / "y.fa"
    p.write_text(">y\nabcba\n")
    res = run("maw", p, "--alphabet", "abcd", "--maxlen", "2")
    assert res.output.splitlines() == [">y", "D", "AA", "AC", "BB", "CA", "CC"]


def test_dist_matches_table(fixture_path):
    res = run("dist", fixture_path, "--measure", "delta")
    assert res.exit_code == 0
    rows = [line.split("\t") for line in res.output.splitlines()]
    labels = rows[0][1:]
    values = {(rows[i + 1][0], labels[j]): float(rows[i + 1][j + 1])
              for i in range(len(labels)) for j in range(len(labels))}
    for key, expected in upper_triangle(DELTA).items():
        assert values[key] == pytest.approx(expected, abs=0.005)


def test_dist_with_tree_to_files(fixture_path, tmp_path):
    out = tmp_path / "m.phy"
    res = run("dist", fixture_path, "--format", "phylip", "--tree", "nj", "--output", out)
    assert res.exit_code == 0
    m = DistanceMatrix.from_phylip(out.read_text())
    assert len(m) == 11
    newick = (tmp_path / "m.phy.nwk").read_text()
    assert "(Chimpanzee:" in newick and newick.strip().endswith(";")


def test_dist_tree_on_stdout(fixture_path):
    res = run("dist", fixture_path, "--tree", "upgma", "--precision", "3")
    assert res.output.rstrip().endswith(";")


def test_output_is_deterministic(fixture_path):
    a = run("dist", fixture_path, "--tree", "nj").output
    b = run("dist", fixture_path, "--tree", "nj").output
    assert a == b


def test_tree_from_fasta_and_phylip(fixture_path, tmp_path):
    nj = run("tree", fixture_path, "--tree", "nj", "--no-lengths")
    assert nj.exit_code == 0
    assert "(Chimpanzee,Gorilla)" in nj.output
    phy = tmp_path / "m.phy"
    phy.write_text(build_matrix(load_beta_globin()).to_phylip(precision=17))
    from_matrix = run("tree", phy, "--method", "nj", "--no-lengths")
    assert from_matrix.output == nj.output
    assert "Human" in run("tree", phy, "--ascii").output


def test_compare(fixture_path):
    res = run("compare", fixture_path)
    lines = res.output.splitlines()
    assert len(lines) == 1 + 55
    row = next(line.split("\t") for line in lines if line.startswith("Mouse\tRat"))
    assert row[2:4] == ["210", "47"] and row[5:7] == ["1038", "199"]


def test_identical_records(tmp_path):
    p = tmp_path / "same.fa"
    p.write_text(">a\nACGTTGCA\n>b\nACGTTGCA\n")
    res = run("dist", p)
    assert res.output.splitlines()[1:] == ["a\t0\t0", "b\t0\t0"]


@pytest.mark.parametrize("content, args", [
    (">a\nACGT\n>a\nACGT\n", ()),
    ("ACGT\n", ()),
    (">a\nACNT\n>b\nACGT\n", ("--alphabet", "ACGT")),
    (">a\nACGT\n", ()),
    (">a\nACGT\n>b\nAGGT\n", ("--measure", "distl")),
])
def test_input_errors_exit_2(tmp_path, content, args):
    p = tmp_path / "bad.fa"
    p.write_text(content)
    res = run("dist", p, *args)
    assert res.exit_code == 2


def test_skip_invalid(tmp_path):
    p = tmp_path / "mixed.fa"
    p.write_text(">a\nACGT\n>b\nACNT\n>c\nAGGT\n")
    res = run("dist", p, "--alphabet", "ACGT", "--skip-invalid")
    assert res.exit_code == 0
    assert res.output.splitlines()[0] == "\ta\tc"


def test_invariant_failure_exit_3(tmp_path, monkeypatch):
    import mawdist.pipeline as pipeline
    from mawdist.alphabet import InvariantError

    def broken(*a, **k):
        raise InvariantError("boom")

    monkeypatch.setattr(pipeline, "ratio_from_profiles", broken)
    p = tmp_path / "ok.fa"
    p.write_text(">a\nACGT\n>b\nAGGT\n")
    assert run("compare", p).exit_code == 3


def test_run_pipeline_writes_artifacts(fixture_path, tmp_path):
    cfg = RunConfig(measure="dist", tree="upgma", matrix_format="csv", ratios=True)
    res = run_pipeline(cfg, fixture_path, tmp_path / "m.csv", tmp_path / "t.nwk", tmp_path / "r.tsv")
    assert res.tree.rooted
    assert (tmp_path / "m.csv").read_text().startswith(",Human,")
    assert (tmp_path / "t.nwk").read_text().endswith(";\n")
    assert len((tmp_path / "r.tsv").read_text().splitlines()) == 56


@pytest.mark.parametrize("kwargs", [
    {"measure": "x"}, {"measure": "distl"}, {"tree": "ml"}, {"matrix_format": "xml"}, {"precision": 0},
])
def test_run_config_validation(kwargs):
    with pytest.raises(SequenceInputError):
        RunConfig(**kwargs)
