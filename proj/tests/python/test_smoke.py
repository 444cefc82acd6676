import os
from pathlib import Path

import pytest

import ontoarch

FIXTURES = Path(os.environ.get("ONTOARCH_FIXTURE_DIR", Path(__file__).parents[1] / "fixtures"))


def load(directory):
    return {p.name: p.read_text(encoding="utf-8") for p in sorted(directory.glob("*.onto"))}


def test_counts():
    assert ontoarch.counts() == {"terms": 19, "properties": 10, "relationships": 12}
    specs = ontoarch.term_specs()
    assert len(specs) == 19
    assert specs[0]["key"] == "Thing"
    assert all(s["root"] for s in specs)


def test_tokenize_and_format():
    tokens = ontoarch.tokenize("ontology A at CO { }")
    assert [t[1] for t in tokens[:4]] == ["ontology", "A", "at", "CO"]
    assert tokens[0][0] == "keyword" and tokens[1][0] == "identifier"
    assert len(tokens) == 7
    assert ontoarch.format_source("ontology A at CO { }") == "ontology A at CO {\n}\n"
    with pytest.raises(ValueError):
        ontoarch.format_source("ontology X at XX { }")


def test_validate_fig2_clean():
    report = ontoarch.validate(load(FIXTURES / "fig2"))
    assert report["exit_code"] == 0
    assert report["diagnostics"] == []
    assert report["summary"]["files"] == 5
    assert report["text"] == "0 errors, 0 warnings\n"


@pytest.mark.parametrize("code", ["E202", "E311", "E313"])
def test_mutant_reports_target_code(code):
    sources = load(FIXTURES / "fig2")
    sources.update(load(FIXTURES / "mutants" / code))
    report = ontoarch.validate(sources)
    assert report["exit_code"] == 1
    assert [d["code"] for d in report["diagnostics"]] == [code]


def test_validate_paths_and_graph():
    report = ontoarch.validate_paths([FIXTURES / "fig2"])
    assert report["exit_code"] == 0
    dot = ontoarch.export_graph(load(FIXTURES / "fig2"))
    assert dot.startswith("digraph")
    assert '"ProcessCO.Process" -> "ThingFO.Thing"' in dot


def test_explain_and_run():
    assert "The Power of a Thing only interacts with other Things." in ontoarch.explain("E313")
    assert ontoarch.explain("Zorp") is None
    code, out, _ = ontoarch.run(["metamodel", "--counts"])
    assert (code, out) == (0, "terms=19 properties=10 relationships=12\n")
    code, _, err = ontoarch.run(["explain", "Zorp"])
    assert code == 2 and "unknown topic" in err
