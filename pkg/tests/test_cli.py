import io
import json
import subprocess
import sys

import pytest

from lexigrid.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_grid_budget_exceeded(fixtures):
    code, out, err = call("analyze-grid", fixtures / "grid13_26.txt")
    assert code == 1
    assert "budget 25 exceeded" in out and "budget 25 exceeded" in err


def test_analyze_grid_within_budget(fixtures):
    code, out, _ = call("analyze-grid", fixtures / "grid13_25.txt", "--json")
    doc = json.loads(out)
    assert code == 0
    res = doc["results"]
    assert res["budget"] == {"black": 25, "budget": 25, "exceeded": False, "percent": 15}
    assert res["prediction"]["matches_enumeration"] is True
    assert res["prediction"]["total"] == res["enumeration"]["total"] == 76
    assert res["mean_length"]["lower_bound"] == round(288 / 76, 6)


def test_analyze_grid_budget_flag(fixtures):
    code, out, _ = call("analyze-grid", fixtures / "lettered5.txt", "--max-black-percent", "20", "--json")
    res = json.loads(out)["results"]
    assert code == 0 and res["budget"]["budget"] == 5
    assert res["annotations"]["vowel_percent"] == 60


def test_analyze_grid_adjacent_still_enumerates(fixtures):
    code, out, err = call("analyze-grid", fixtures / "adjacent.txt", "--json")
    doc = json.loads(out)
    assert code == 0
    assert "prediction" not in doc["results"]
    assert doc["results"]["enumeration"]["total"] == 15
    assert any("adjacent" in w for w in doc["warnings"])


def test_analyze_small_grid_skips_formulas(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(".#.\n...\n")
    code, out, _ = call("analyze-grid", f, "--json")
    doc = json.loads(out)
    assert "prediction" not in doc["results"] and doc["results"]["enumeration"]["total"] == 6
    assert any("n, m >= 3" in w for w in doc["warnings"])


@pytest.mark.parametrize("content", ["..\n.\n", "..\nx.\n", ""])
def test_analyze_grid_parse_errors(tmp_path, content):
    f = tmp_path / "bad.txt"
    f.write_text(content)
    assert call("analyze-grid", f)[0] == 2


def test_missing_file():
    code, out, err = call("ecart", "missing.txt", "--reference", "ROMANIAN_RANKS_23")
    assert code == 2 and out == "" and "missing.txt" in err


def test_tables_show_csv():
    code, out, _ = call("tables", "show", "RECORD_GRIDS", "--csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "side,min_black,percentage,count_known" and len(lines) == 10


def test_tables_show_json():
    code, out, _ = call("tables", "show", "GRID_SYLLABLE_DIST", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "distribution" and doc["payload"]["values"]["1"] == "35.588"


def test_tables_list_and_unknown():
    code, out, _ = call("tables", "list", "--json")
    assert code == 0 and "ROMANIAN_RANKS_23" in json.loads(out)["results"]
    assert call("tables", "show", "NOPE")[0] == 2
    assert call("tables", "show")[0] == 2


def test_selfcheck_passes():
    code, out, _ = call("selfcheck")
    assert code == 0
    assert "FAIL" not in out


def test_selfcheck_json():
    code, out, _ = call("selfcheck", "--json")
    res = json.loads(out)["results"]
    assert code == 0 and res["summary"]["failed"] == 0
    assert res["grid ecart"]["passed"] is True


def test_ecart_named_reference(fixtures):
    code, out, _ = call("ecart", fixtures / "text_ro.txt", "--reference", "ROMANIAN_RANKS_23", "--json")
    res = json.loads(out)["results"]
    assert code == 0 and res["n"] == 23 and res["alphabet"] == "grid23"
    assert res["ecart"] <= res["upper_bound"]
    assert sum(s["ecart"] for s in res["symbols"]) == 0


def test_ecart_grouped_reference_table(fixtures):
    code, out, _ = call("ecart", fixtures / "text_ro.txt", "--reference", "JURIDICAL_GROUPS", "--json")
    assert code == 0 and json.loads(out)["results"]["n"] == 23


def test_ecart_rank_file(fixtures):
    code, out, err = call("ecart", fixtures / "text_ro.txt", "--reference", fixtures / "ranks.txt", "--json")
    res = json.loads(out)["results"]
    assert code == 0
    assert [s["symbol"] for s in res["symbols"][:3]] == ["E", "A", "I"]
    assert "ranked last" in err


def test_ecart_words(fixtures, tmp_path):
    ref = tmp_path / "words.txt"
    ref.write_text("SI\nIN\nDE\n")
    code, out, _ = call("ecart", fixtures / "text_ro.txt", "--reference", ref, "--words", "--alphabet", "grid23", "--json")
    res = json.loads(out)["results"]
    assert code == 0 and res["unit"] == "words"
    assert res["symbols"][0]["symbol"] == "SI"


def test_ecart_reference_file_is_folded(fixtures, tmp_path):
    ref = tmp_path / "words.txt"
    ref.write_text("ȘI\nÎN\nQWERTY\n", encoding="utf-8")
    code, out, err = call("ecart", fixtures / "text_ro.txt", "--reference", ref, "--words", "--json")
    res = json.loads(out)["results"]
    assert code == 0
    top = {s["symbol"]: s for s in res["symbols"][:2]}
    assert set(top) == {"SI", "IN"}
    assert all(s["ecart"] == 0 for s in top.values())
    assert "QWERTY" in err


def test_ecart_bad_reference(fixtures):
    assert call("ecart", fixtures / "text_ro.txt", "--reference", "RECORD_GRIDS")[0] == 2
    assert call("ecart", fixtures / "text_ro.txt", "--reference", "no/such/file")[0] == 2


def test_infometrics(fixtures):
    code, out, _ = call("infometrics", fixtures / "text_ro.txt", "--alphabet", "grid23", "--json")
    res = json.loads(out)["results"]
    assert code == 0
    assert 0 < res["entropy_bits"] <= res["max_entropy_bits"]
    assert res["min_energy"] <= res["informational_energy"] <= 1


def test_infometrics_empty(tmp_path):
    f = tmp_path / "e.txt"
    f.write_text("123 !!\n")
    assert call("infometrics", f, "--alphabet", "grid23")[0] == 2


def test_corpus_stats(fixtures):
    code, out, _ = call(
        "corpus-stats", fixtures / "text_ro.txt", "--alphabet", "poetry31",
        "--syllable-lexicon", fixtures / "lexicon.tsv", "--json",
    )
    res = json.loads(out)["results"]
    assert code == 0
    assert res["letters"] == sum(v["count"] for v in res["letter_frequencies"].values())
    assert res["vowel_percent"] + res["consonant_percent"] == pytest.approx(100)
    assert res["syllables_per_word"]["mean"] == res["ratios"]["syllables/word"]
    assert "ȘI" in res["keywords"]


def test_corpus_stats_multiple_files_merge(fixtures, tmp_path):
    other = tmp_path / "b.txt"
    other.write_text("ana are mere\n", encoding="utf-8")
    _, merged, _ = call("corpus-stats", fixtures / "text_ro.txt", other, "--alphabet", "grid23", "--json")
    _, per_file, _ = call("corpus-stats", fixtures / "text_ro.txt", other, "--alphabet", "grid23", "--per-file", "--json")
    merged = json.loads(merged)["results"]
    per_file = json.loads(per_file)["results"]
    assert merged["letters"] == sum(r["letters"] for r in per_file.values())


def test_corpus_stats_annotated(fixtures):
    code, out, _ = call("corpus-stats", fixtures / "annotated.tsv", "--annotated", "--alphabet", "poetry31", "--json")
    res = json.loads(out)["results"]
    assert code == 0
    assert res["attributes"]["pos"] == {"adj": 20, "noun": 60, "verb": 20}


def test_corpus_stats_requires_alphabet(fixtures):
    assert call("corpus-stats", fixtures / "text_ro.txt")[0] == 2


def test_config_sets_defaults(fixtures):
    code, out, _ = call("--config", fixtures / "config.ini", "corpus-stats", fixtures / "text_ro.txt", "--json")
    assert code == 0 and json.loads(out)["results"]["alphabet"] == "poetry31"
    code, out, _ = call("--config", fixtures / "config.ini", "analyze-grid", fixtures / "lettered5.txt", "--json")
    assert code == 0 and json.loads(out)["results"]["budget"]["percent"] == 20
    # flags override the file
    code, out, _ = call("--config", fixtures / "config.ini", "analyze-grid", fixtures / "lettered5.txt", "--max-black-percent", "15")
    assert code == 1


def test_module_entry_point(fixtures):
    proc = subprocess.run(
        [sys.executable, "-m", "lexigrid", "tables", "show", "RECORD_GRIDS", "--csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and len(proc.stdout.splitlines()) == 10
