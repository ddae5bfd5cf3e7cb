import pytest

from services.corpus import CorpusService
from services.invariants import nonnegativityReport

CorpusService.loadCorpus()


def test_corpus_is_loaded():
    ids = [entry.id for entry in CorpusService.entries]
    assert len(ids) == len(set(ids))
    assert {"loop", "coloop", "mgon3", "points7y", "gray2"} <= set(ids)


def test_unknown_entry():
    with pytest.raises(NameError):
        CorpusService.getEntry("nothing")


@pytest.mark.parametrize("entry", CorpusService.entries, ids=lambda entry: entry.id)
def test_goldens(entry):
    assert CorpusService.check(entry) == []


@pytest.mark.parametrize("entry", CorpusService.entries, ids=lambda entry: entry.id)
def test_sign_patterns(entry):
    report = nonnegativityReport(CorpusService.polymatroid(entry))
    assert report.ok, report.offending


def test_summary():
    summary = CorpusService.summary(CorpusService.getEntry("gray1"))
    assert summary["goldens"] == ["pCoefficients", "tutte"]
    assert summary["source"] == "Gray graphs example"
