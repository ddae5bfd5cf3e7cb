import io

from conftest import dataDir

from corpus.basic import LoopEntry
from objects import QSymFn
from services.corpus import CorpusService
from services.document import DocumentService
from tools.cli import EXIT_CAP, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run


def data(name):
    return str(dataDir / f"{name}.json")


def stdin(document):
    return io.StringIO(DocumentService.jsonDumps(document))


def test_p_of_hexagon():
    result = run(["p", "--input", data("mgon6")])
    assert result.code == EXIT_OK
    assert result.output == "1 - s[1] + s[1,1] - s[1,1,1] + s[1,1,1,1] - s[1,1,1,1,1]"


def test_g_and_tutte():
    assert run(["g", "--input", data("loop")]).output == "U[0]"
    assert run(["tutte", "--input", data("mgon3")]).output == "x^2 + x + y"


def test_g_methods_print_the_same():
    chains = run(["g", "--input", data("points6x")])
    subsets = run(["g", "--input", data("points6x"), "--method", "subsets"])
    assert chains.code == subsets.code == EXIT_OK
    assert chains.output == subsets.output


def test_json_output_parses_back():
    result = run(["g", "--json", "--input", data("loop")])
    document = DocumentService.jsonLoads(result.output)
    assert DocumentService.fromJson(document) == QSymFn("U", {(0,): 1})


def test_validate_reports_violation():
    bad = {"type": "rank_table", "n": 1, "rank": {"": 1, "0": 1}}
    result = run(["validate", "--input", "-"], stdin(bad))
    assert result.code == EXIT_INVALID
    assert result.output.startswith("violation(normalization)")

    result = run(["validate", "--json", "--input", "-"], stdin(bad))
    assert DocumentService.jsonLoads(result.output)["axiom"] == "normalization"

    assert run(["validate", "--input", data("mgon4")]).output == "ok"


def test_invalid_polymatroid_exits_two():
    bad = {"type": "rank_table", "n": 2, "rank": {"": 0, "0": 1, "1": 1, "0,1": 3}}
    result = run(["p", "--input", "-"], stdin(bad))
    assert result.code == EXIT_INVALID
    assert "violation(submodular)" in result.error


def test_usage_errors():
    assert run(["p", "--input", str(dataDir / "missing.json")]).code == EXIT_USAGE
    assert run(["p", "--input", "-"], io.StringIO("{")).code == EXIT_USAGE
    assert run(["frobnicate", "--input", data("loop")]).code == EXIT_USAGE
    assert run(["p"]).code == EXIT_USAGE
    assert run(["p", "--input", "-"], stdin({"type": "mystery"})).code == EXIT_USAGE


def test_caps():
    assert run(["g", "--input", data("points7x"), "--max-chains", "5"]).code == EXIT_CAP
    assert run(["p", "--input", data("loop"), "--max-n", "20"]).code == EXIT_USAGE
    assert run(["p", "--input", data("loop"), "--max-n", "20", "--allow-large"]).code == EXIT_OK


def test_dual_and_sum(loop, coloop):
    result = run(["dual", "--input", data("loop")])
    assert DocumentService.buildPolymatroid(DocumentService.jsonLoads(result.output)) == coloop

    result = run(["sum", "--input", data("loop"), "--input", data("coloop")])
    both = DocumentService.buildPolymatroid(DocumentService.jsonLoads(result.output))
    assert both.rank == (0, 0, 1, 1)


def test_decomposition_check():
    result = run(["decomp-check", "--input", data("u24split")])
    assert result.code == EXIT_OK
    assert result.output.endswith("valuative: ok")

    result = run(["decomp-check", "--input", data("u24broken"), "--grid-denom", "2"])
    assert result.code == EXIT_INVALID
    assert result.output.startswith("indicator: nonzero -1")


def test_quasisymmetric_maps_from_stdin():
    u0 = {"type": "qsym", "basis": "U", "terms": [{"word": [0]}]}
    assert run(["tau", "--input", "-"], stdin(u0)).output == "1 + t"

    kernel = {"type": "qsym", "basis": "U", "terms": [{"word": [1]}, {"word": [0], "coeff": -1}]}
    assert run(["theta", "--input", "-"], stdin(kernel)).output == "0"

    assert run(["xi", "--input", data("coloop")]).output == "1"


def test_rees_series():
    result = run(["rees", "--input", data("coloop"), "--terms", "2"])
    assert result.output == "[0] 1\n[1] 1 + q*t\n[2] 1 + 2*q*t + q^2*t^2"
    assert run(["rees", "--input", data("coloop"), "--terms", "-1"]).code == EXIT_USAGE


def test_nonnegativity():
    result = run(["nonneg", "--input", data("coloop")])
    assert result.code == EXIT_OK
    assert result.output == "ok"


def test_f_and_characteristic_polynomial():
    assert run(["f", "--input", data("loop")]).output == "M[1]"
    assert run(["charpoly", "--input", data("mgon3")]).output == "q^2 - 3*q + 2"


class BrokenEntry(LoopEntry):
    def __init__(self):
        super().__init__()
        self.id = "broken"

    def goldens(self):
        return {"g": QSymFn("U", {(1,): 1})}


def test_examples(monkeypatch):
    monkeypatch.setattr(CorpusService, "loadCorpus", lambda: None)
    monkeypatch.setattr(CorpusService, "entries", [LoopEntry()])
    result = run(["examples"])
    assert result.code == EXIT_OK
    assert result.output == "ok   loop"

    monkeypatch.setattr(CorpusService, "entries", [LoopEntry(), BrokenEntry()])
    result = run(["examples"])
    assert result.code == EXIT_MISMATCH
    assert "FAIL broken g: expected U[1], got U[0]" in result.output
