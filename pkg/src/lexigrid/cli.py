"""Batch command-line interface.

Exit status: 0 on success, 1 when a check fails (budget exceeded, selfcheck
regression), 2 on I/O or parse errors. Output is plain text by default and a
sorted-key JSON document with ``--json``; both are byte-stable for identical
inputs.
"""

from __future__ import annotations

import argparse
import configparser
import json
import math
import sys
import unicodedata
import warnings
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from . import reference_data as rd
from .corpus_core import (
    PROFILES,
    Alphabet,
    EmptyInput,
    FrequencyTable,
    NoVowelsWarning,
    attribute_distribution,
    get_alphabet,
    keyword_top_k,
    length_distribution,
    letter_frequencies,
    load_syllable_lexicon,
    normalize_stream,
    parse_annotated,
    text_ratios,
    vowel_ratio,
    word_frequencies,
    word_tokens,
)
from .grid_core import GridError, black_census, extract_words, read_grid, validate_spacing
from .grid_laws import (
    NoWords,
    PreconditionViolated,
    black_budget,
    length_report,
    predict_counts,
    word_bounds,
)
from .infometrics import entropy_bits, informational_energy
from .rankstats import RankTable, build_rank_table, ecart_of_table, expand_groups, parse_rank_list
from .selfcheck import format_value, run_checks

EXIT_OK, EXIT_CHECK, EXIT_IO = 0, 1, 2
DIGITS = 6


class InputError(Exception):
    """Bad input file or argument; maps to exit status 2."""


@dataclass
class Report:
    command: str
    inputs: list[str]
    results: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        doc = {"command": self.command, "inputs": self.inputs, "results": _plain(self.results), "warnings": self.warnings}
        return json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"# {self.command}: {', '.join(self.inputs) if self.inputs else '-'}"]
        _text_lines(_plain(self.results), 0, lines)
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"


def _plain(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else round(float(obj), DIGITS)
    if isinstance(obj, Decimal):
        return int(obj) if obj == obj.to_integral_value() else float(obj)
    if isinstance(obj, float):
        return round(obj, DIGITS) if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return str(obj)


def _text_lines(obj, depth, out):
    pad = "  " * depth
    for key, value in obj.items():
        if isinstance(value, dict):
            out.append(f"{pad}{key}:")
            _text_lines(value, depth + 1, out)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            out.append(f"{pad}{key}:")
            for item in value:
                out.append(f"{pad}  - " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
        else:
            out.append(f"{pad}{key}: {_scalar(value)}")


def _scalar(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return " ".join(_scalar(v) for v in value)
    return str(value)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _percent_map(table: FrequencyTable, order) -> dict:
    probs = table.probabilities
    return {s: {"count": table.counts[s], "percent": 100 * probs[s]} for s in order}


# --- analyze-grid -----------------------------------------------------------


def cmd_analyze_grid(args) -> tuple[Report, int]:
    try:
        grid = read_grid(args.file)
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from exc
    except GridError as exc:
        raise InputError(f"{args.file}: {exc}") from exc

    report = Report("analyze-grid", [args.file])
    status = EXIT_OK
    census = black_census(grid)
    words = extract_words(grid)
    spacing = validate_spacing(grid)
    res = report.results
    res["grid"] = {"rows": grid.n, "columns": grid.m, "cells": grid.n * grid.m, "black": grid.p}
    res["census"] = census.as_dict()
    res["spacing_valid"] = spacing
    res["enumeration"] = {
        "across": len(words.across),
        "down": len(words.down),
        "total": words.total,
        "difference": words.difference,
    }

    if not spacing:
        report.warnings.append("adjacent black cells: closed-form counts skipped, enumeration shown")
    else:
        try:
            pred = predict_counts(grid.n, grid.m, census)
        except PreconditionViolated as exc:
            report.warnings.append(f"{exc}; closed-form counts skipped, enumeration shown")
        else:
            matches = (pred.across_words, pred.down_words) == (len(words.across), len(words.down))
            res["prediction"] = {
                "across": pred.across_words,
                "down": pred.down_words,
                "total": pred.total_words,
                "difference": pred.difference,
                "matches_enumeration": matches,
            }
            if not matches:
                report.warnings.append("closed-form counts disagree with enumeration")
                status = EXIT_CHECK

    if grid.p < grid.n * grid.m:
        lo, hi = word_bounds(grid.n, grid.m, grid.p)
        res["bounds"] = {"min": lo, "max": hi, "within": lo <= words.total <= hi}
    try:
        lr = length_report(grid, words)
    except NoWords:
        report.warnings.append("grid has no white cells")
    else:
        res["mean_length"] = {
            "letter_slots": lr.letter_slots,
            "mean": lr.mean_length,
            "lower_bound": lr.lower_bound,
            "holds": lr.mean_length >= lr.lower_bound,
        }

    pct = args.max_black_percent
    budget = black_budget(grid.n, grid.m, pct)
    exceeded = grid.p > budget
    res["budget"] = {"percent": pct, "budget": budget, "black": grid.p, "exceeded": exceeded}
    if exceeded:
        report.warnings.append(f"budget {budget} exceeded: {grid.p} black cells at {pct}%")
        status = EXIT_CHECK

    annotations = {}
    if words.total:
        annotations["across_share_percent"] = Fraction(100 * len(words.across), words.total)
        annotations["across_share_claimed_percent"] = rd.ratio_set("LANGUAGE_CONSTANTS")["grid_horizontal_percent"]
    letters = grid.letters()
    if letters:
        vowels = sum(ch in "AEIOU" for ch in letters)
        annotations["vowel_percent"] = Fraction(100 * vowels, len(letters))
        annotations["vowel_percent_claimed"] = rd.ratio_set("LANGUAGE_CONSTANTS")["grid_vowels_claim"]
    if annotations:
        res["annotations"] = annotations
    return report, status


# --- corpus-stats -----------------------------------------------------------


def _corpus_stats(texts: list[str], alphabet: Alphabet, lexicon, annotated: bool, top_k: int) -> tuple[dict, list[str]]:
    warns = []
    if annotated:
        tokens_ann = [t for text in texts for t in parse_annotated(text)]
        raw_text = "\n".join(t.surface for t in tokens_ann)
        lines = [t.surface for t in tokens_ann]
    else:
        tokens_ann = []
        raw_text = "\n".join(texts)
        lines = raw_text.splitlines()

    norm = normalize_stream(raw_text, alphabet)
    table = letter_frequencies(norm.symbols, alphabet)
    tokens = word_tokens(raw_text, alphabet)
    out: dict = {"alphabet": alphabet.name, "letters": len(norm.symbols), "discarded": norm.discarded, "words": len(tokens)}
    if not norm.symbols:
        warns.append("no letters found")
        return out, warns

    ranks = build_rank_table(table)
    out["letter_frequencies"] = _percent_map(table, ranks.symbols)
    out["vowel_percent"] = vowel_ratio(table)
    out["consonant_percent"] = 100 - vowel_ratio(table)
    out["entropy_bits"] = entropy_bits(table)
    out["informational_energy"] = informational_energy(table)

    novowel = sorted({t for t in tokens if not any(ch in alphabet.vowels for ch in t) and t not in (lexicon or {})})
    if novowel:
        warns.append(f"{len(novowel)} word type(s) without vowels counted as one syllable: {' '.join(novowel[:10])}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NoVowelsWarning)
        for measure in ("letters", "syllables"):
            dist = length_distribution(tokens, measure, alphabet, lexicon)
            out[f"{measure}_per_word"] = {
                "percent": {str(k): v for k, v in dist.percentages().items()},
                "mean": dist.mean,
            }
        if not annotated:
            out["ratios"] = text_ratios(lines, alphabet, lexicon)
    out["keywords"] = keyword_top_k(tokens, top_k)

    if annotated:
        keys = sorted({k for t in tokens_ann for k in t.attributes})
        out["attributes"] = {
            k: {str(v): 100 * w for v, w in sorted(attribute_distribution(tokens_ann, k).support.items())}
            for k in keys
        }
    return out, warns


def cmd_corpus_stats(args) -> tuple[Report, int]:
    alphabet = get_alphabet(args.alphabet)
    lexicon = None
    if args.syllable_lexicon:
        try:
            lexicon = load_syllable_lexicon(_read_text(args.syllable_lexicon), alphabet)
        except ValueError as exc:
            raise InputError(f"{args.syllable_lexicon}: {exc}") from exc
    texts = {f: _read_text(f) for f in args.files}
    report = Report("corpus-stats", list(args.files))
    try:
        if args.per_file:
            for f, text in texts.items():
                stats, warns = _corpus_stats([text], alphabet, lexicon, args.annotated, args.top_k)
                report.results[f] = stats
                report.warnings.extend(f"{f}: {w}" for w in warns)
        else:
            stats, warns = _corpus_stats(list(texts.values()), alphabet, lexicon, args.annotated, args.top_k)
            report.results = stats
            report.warnings.extend(warns)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return report, EXIT_OK


# --- ecart ------------------------------------------------------------------


def _load_reference(name: str) -> tuple[RankTable, str | None, dict]:
    """Resolve ``--reference`` to (ranking, alphabet name, merge map)."""
    if name in rd.list_tables():
        table = rd.get_table(name)
        if table.kind not in ("rank_list", "grouped_ranks"):
            raise InputError(f"{name} is a {table.kind} table, not a ranking")
        return rd.rank_table(name), table.payload.get("alphabet"), table.payload.get("merge", {})
    path = Path(name)
    if not path.exists():
        raise InputError(f"--reference {name!r} is neither a table name nor a file")
    try:
        groups = parse_rank_list(_read_text(name))
        return expand_groups(groups), None, {}
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from exc


def _fold_reference(reference: RankTable, alphabet) -> tuple[RankTable, list[str]]:
    """Fold a hand-written ranking into ``alphabet`` the same way the text is folded.

    Entries that cannot be spelled in the alphabet are dropped; entries that
    fold together keep their best rank.
    """
    folded, dropped = [], []
    for sym in reference:
        chars = [alphabet.fold(ch) for ch in unicodedata.normalize("NFC", sym)]
        if not chars or None in chars:
            dropped.append(sym)
            continue
        folded.append("".join(chars))
    return RankTable(tuple(dict.fromkeys(folded))), dropped


def cmd_ecart(args) -> tuple[Report, int]:
    text = _read_text(args.file)
    reference, ref_alpha, merge = _load_reference(args.reference)
    alphabet = get_alphabet(args.alphabet or ref_alpha or "grid23")
    dropped = []
    if args.reference not in rd.list_tables():
        reference, dropped = _fold_reference(reference, alphabet)
        if not reference.n:
            raise InputError(f"{args.reference}: no entries expressible in alphabet {alphabet.name}")
    report = Report("ecart", [args.file])
    if args.words:
        tokens = word_tokens(text, alphabet)
        if not tokens:
            raise InputError(f"{args.file}: no words")
        table = word_frequencies(tokens)
    else:
        table = letter_frequencies(normalize_stream(text, alphabet).symbols, alphabet).merged(merge)
        if not table.total:
            raise InputError(f"{args.file}: no letters in alphabet {alphabet.name}")
    try:
        ecart = ecart_of_table(reference, table)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ref_rank = reference.with_absent(ecart.per_symbol).rank_of
    observed = {s: ref_rank[s] - e for s, e in ecart.per_symbol.items()}
    res = report.results
    res["reference"] = args.reference
    res["unit"] = "words" if args.words else "letters"
    res["alphabet"] = alphabet.name
    res["n"] = ecart.n
    res["sum_abs"] = ecart.total_abs
    res["ecart"] = ecart.mean_abs
    res["ecart_exact"] = str(ecart.mean_abs)
    res["upper_bound"] = ecart.upper_bound
    res["symbols"] = [
        {"symbol": s, "reference_rank": ref_rank[s], "observed_rank": observed[s], "ecart": ecart.per_symbol[s]}
        for s in sorted(ecart.per_symbol, key=ref_rank.get)
    ]
    if dropped:
        report.warnings.append(f"{len(dropped)} reference entries outside alphabet {alphabet.name} ignored: {', '.join(dropped)}")
    unranked = [s for s in ecart.per_symbol if s not in reference]
    if unranked:
        report.warnings.append(f"{len(unranked)} symbol(s) missing from the reference were ranked last")
    return report, EXIT_OK


# --- infometrics ------------------------------------------------------------


def cmd_infometrics(args) -> tuple[Report, int]:
    alphabet = get_alphabet(args.alphabet)
    text = _read_text(args.file)
    norm = normalize_stream(text, alphabet)
    table = letter_frequencies(norm.symbols, alphabet)
    report = Report("infometrics", [args.file])
    try:
        h = entropy_bits(table)
        e = informational_energy(table)
    except EmptyInput as exc:
        raise InputError(f"{args.file}: {exc}") from exc
    used = len(table.nonzero())
    report.results = {
        "alphabet": alphabet.name,
        "letters": table.total,
        "symbols_used": used,
        "entropy_bits": h,
        "max_entropy_bits": math.log2(used),
        "informational_energy": e,
        "min_energy": Fraction(1, used),
    }
    return report, EXIT_OK


# --- tables -----------------------------------------------------------------


def cmd_tables(args) -> tuple[str | Report, int]:
    if args.action == "list":
        report = Report("tables list", [])
        report.results = {name: {"kind": t.kind, "provenance": t.provenance} for name, t in ((n, rd.get_table(n)) for n in rd.list_tables())}
        return report, EXIT_OK
    if not args.name:
        raise InputError("tables show needs a table name")
    try:
        table = rd.get_table(args.name)
    except rd.UnknownTable:
        raise InputError(f"unknown table {args.name!r}; see 'tables list'") from None
    if args.csv:
        return rd.table_to_csv(table), EXIT_OK
    if args.json:
        return rd.table_to_json(table), EXIT_OK
    lines = [f"# {table.name} ({table.kind})", f"# {table.provenance}"]
    lines += [f"# note: {n}" for n in table.notes]
    lines.append(rd.table_to_csv(table).rstrip("\n"))
    return "\n".join(lines) + "\n", EXIT_OK


# --- selfcheck --------------------------------------------------------------


def cmd_selfcheck(args) -> tuple[str | Report, int]:
    results = run_checks()
    failed = [r for r in results if r.gated and not r.passed]
    if args.json:
        report = Report("selfcheck", [])
        report.results = {
            r.name: {"value": r.value, "expected": r.expected, "tolerance": r.tolerance, "passed": r.passed, "gated": r.gated}
            for r in results
        }
        report.results["summary"] = {"checks": len(results), "failed": len(failed)}
        return report, EXIT_CHECK if failed else EXIT_OK
    lines = []
    for r in results:
        tag = ("PASS" if r.passed else "FAIL") if r.gated else ("info" if r.passed else "warn")
        lines.append(f"[{tag}] {r.name}: {format_value(r.value)} (expected {format_value(r.expected)} +/- {r.tolerance})")
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks ok" + (f", {len(failed)} failed" if failed else ""))
    return "\n".join(lines) + "\n", EXIT_CHECK if failed else EXIT_OK


# --- argument parsing -------------------------------------------------------


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    text = _read_text(path)
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text if text.lstrip().startswith("[") else "[lexigrid]\n" + text)
    except configparser.Error as exc:
        raise InputError(f"{path}: {exc}") from exc
    section = parser["lexigrid"] if parser.has_section("lexigrid") else parser[parser.sections()[0]] if parser.sections() else {}
    return dict(section)


def build_parser(config: dict | None = None) -> argparse.ArgumentParser:
    config = config or {}
    default_alpha = config.get("alphabet")
    try:
        default_pct = Decimal(config.get("max_black_percent", "15"))
    except ArithmeticError:
        raise InputError(f"bad max_black_percent in config: {config['max_black_percent']!r}") from None

    parser = argparse.ArgumentParser(prog="lexigrid", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key = value file setting alphabet and max_black_percent")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-grid", help="census, word counts, bounds and budget of a grid file")
    p.add_argument("file")
    p.add_argument("--max-black-percent", type=Decimal, default=default_pct)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze_grid)

    p = sub.add_parser("corpus-stats", help="letter, word-length and syllable statistics of text files")
    p.add_argument("files", nargs="+")
    p.add_argument("--alphabet", choices=sorted(PROFILES), default=default_alpha, required=default_alpha is None)
    p.add_argument("--annotated", action="store_true", help="inputs are surface<TAB>key=value token files")
    p.add_argument("--syllable-lexicon")
    p.add_argument("--per-file", action="store_true")
    p.add_argument("--top-k", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_corpus_stats)

    p = sub.add_parser("ecart", help="rank deviation of a text against a reference ranking")
    p.add_argument("file")
    p.add_argument("--reference", required=True, help="table name or rank file")
    p.add_argument("--words", action="store_true", help="rank words instead of letters")
    p.add_argument("--alphabet", choices=sorted(PROFILES), default=default_alpha)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ecart)

    p = sub.add_parser("infometrics", help="entropy and informational energy of a text")
    p.add_argument("file")
    p.add_argument("--alphabet", choices=sorted(PROFILES), default=default_alpha, required=default_alpha is None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_infometrics)

    p = sub.add_parser("tables", help="list or show embedded reference tables")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("selfcheck", help="recompute published values from the embedded tables")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def _config_path(argv: list[str]) -> str | None:
    for i, arg in enumerate(argv):
        if arg == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if arg.startswith("--config="):
            return arg.split("=", 1)[1]
    return None


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config = _load_config(_config_path(argv))
        parser = build_parser(config)
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_IO if exc.code else EXIT_OK
        output, status = args.func(args)
    except InputError as exc:
        print(f"lexigrid: error: {exc}", file=stderr)
        return EXIT_IO
    if isinstance(output, Report):
        for w in output.warnings:
            print(f"lexigrid: warning: {w}", file=stderr)
        output = output.to_json() if getattr(args, "json", False) else output.to_text()
    stdout.write(output)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
