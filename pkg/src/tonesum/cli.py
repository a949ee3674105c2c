"""Command line interface.

    tonesum summarize --corpus DIR [options]
    tonesum evaluate --corpus DIR --refs DIR [options]
    tonesum polarity-report --corpus DIR [--refs DIR] [options]

Every option may also come from a ``key = value`` config file given with
``--config``; keys are the option names without the leading dashes and
command-line values win over file values.

Exit codes: 0 success, 1 usage or configuration error, 2 data error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from joblib import Parallel, delayed

from .corpus import RawDocument, load_corpus, preprocess_cluster
from .estimators import MMRSummarizer, SentencePreprocessor
from .evaluation import best_score, load_references, mean_score, reference_paths
from .exceptions import ConfigError, DataError, TonesumError
from .tone import Bias, polarity_profile, tag_counts

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2

_FLAG_TYPES = {
    "corpus": "path",
    "refs": "path",
    "stopwords": "path",
    "lexicon": "path",
    "lambda": "float",
    "length": "int",
    "pool": "int",
    "query-terms": "int",
    "bias": "bias",
    "stem-rouge": "bool",
    "format": "format",
    "lambda-sweep": "sweep",
    "jobs": "int",
    "duc": "bool",
    "min-sentence-tokens": "int",
}
_FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    corpus_dir: Path = None
    refs_dir: Path = None
    stopwords_path: Path = None
    lexicon_path: Path = None
    lambda_: float = 0.7
    budget_words: int = 400
    pool_size: int = 30
    query_terms: int = 10
    bias: Bias = Bias.NONE
    stem_rouge: bool = False
    output_format: str = "text"
    lambda_sweep: tuple = field(default=None)
    jobs: int = 1
    duc_mode: bool = False
    min_sentence_tokens: int = 2

    def summarizer(self, lambda_=None, bias=None):
        pre = SentencePreprocessor(
            stopwords=self.stopwords_path,
            duc_mode=self.duc_mode,
            min_sentence_tokens=self.min_sentence_tokens,
        )
        return MMRSummarizer(
            lambda_=self.lambda_ if lambda_ is None else lambda_,
            budget_words=self.budget_words,
            pool_size=self.pool_size,
            query_terms=self.query_terms,
            bias=self.bias if bias is None else bias,
            lexicon=self.lexicon_path,
            preprocessor=pre,
            stem_rouge=self.stem_rouge,
        ).fit()


def parse_sweep(text):
    """``"0.3:0.9:0.1"`` -> ``(0.3, 0.4, ..., 0.9)``."""
    try:
        start, stop, step = (float(p) for p in text.split(":"))
    except ValueError:
        raise ConfigError(f"--lambda-sweep expects START:STOP:STEP, got {text!r}") from None
    if step <= 0 or start > stop:
        raise ConfigError("--lambda-sweep needs STEP > 0 and START <= STOP")
    values = []
    i = 0
    while True:
        v = round(start + i * step, 10)
        if v > stop + 1e-9:
            break
        if not 0.0 <= v <= 1.0:
            raise ConfigError(f"--lambda-sweep value {v} outside [0, 1]")
        values.append(v)
        i += 1
    return tuple(values)


def _convert(key, raw):
    kind = _FLAG_TYPES[key]
    if kind == "path":
        path = Path(raw)
        if not path.exists():
            raise ConfigError(f"--{key}: path does not exist: {raw}")
        return path
    if kind == "bool":
        if isinstance(raw, bool):
            return raw
        low = str(raw).strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"--{key}: expected a boolean, got {raw!r}")
    if kind == "float":
        try:
            value = float(raw)
        except ValueError:
            raise ConfigError(f"--{key}: expected a number, got {raw!r}") from None
        if not 0.0 <= value <= 1.0:
            raise ConfigError(f"--{key} must lie in [0, 1], got {value}")
        return value
    if kind == "int":
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"--{key}: expected an integer, got {raw!r}") from None
        minimum = 0 if key == "min-sentence-tokens" else 1
        if value < minimum:
            raise ConfigError(f"--{key} must be >= {minimum}, got {value}")
        return value
    if kind == "bias":
        try:
            return Bias.parse(raw)
        except DataError:
            raise ConfigError(f"--{key} must be one of positive, negative, none; got {raw!r}") from None
    if kind == "format":
        if raw not in _FORMATS:
            raise ConfigError(f"--{key} must be one of {', '.join(_FORMATS)}; got {raw!r}")
        return raw
    if kind == "sweep":
        return parse_sweep(raw)
    raise AssertionError(kind)


def read_config_file(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (p.strip() for p in line.split("=", 1))
            if key not in _FLAG_TYPES:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


_FIELD_FOR = {
    "corpus": "corpus_dir",
    "refs": "refs_dir",
    "stopwords": "stopwords_path",
    "lexicon": "lexicon_path",
    "lambda": "lambda_",
    "length": "budget_words",
    "pool": "pool_size",
    "query-terms": "query_terms",
    "bias": "bias",
    "stem-rouge": "stem_rouge",
    "format": "output_format",
    "lambda-sweep": "lambda_sweep",
    "jobs": "jobs",
    "duc": "duc_mode",
    "min-sentence-tokens": "min_sentence_tokens",
}


def load_config(flags=None, config_file=None):
    """Merge defaults, config-file values and flags (highest precedence).

    ``flags`` maps option names (``"lambda"``, ``"query-terms"``, ...) to
    raw values.
    """
    merged = {}
    if config_file is not None:
        merged.update(read_config_file(config_file))
    for key, value in (flags or {}).items():
        if key not in _FLAG_TYPES:
            raise ConfigError(f"unknown option --{key}")
        merged[key] = value
    kwargs = {_FIELD_FOR[k]: _convert(k, v) for k, v in merged.items()}
    return RunConfig(**kwargs)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--corpus", metavar="DIR", help="one sub-directory per cluster")
    common.add_argument("--refs", metavar="DIR", help="reference summaries, <cluster>/<length>.txt")
    common.add_argument("--stopwords", metavar="FILE")
    common.add_argument("--lexicon", metavar="FILE", help="term<TAB>score polarity lexicon")
    common.add_argument("--lambda", metavar="F", help="MMR trade-off in [0, 1] (default 0.7)")
    common.add_argument("--length", metavar="N", help="summary budget in words (default 400)")
    common.add_argument("--pool", metavar="N", help="MMR candidate pool size (default 30)")
    common.add_argument("--query-terms", metavar="N", help="pseudo-query size (default 10)")
    common.add_argument("--bias", choices=[b.value for b in Bias])
    common.add_argument("--stem-rouge", action="store_const", const=True)
    common.add_argument("--format", choices=_FORMATS)
    common.add_argument("--lambda-sweep", metavar="A:B:STEP")
    common.add_argument("--jobs", metavar="N", help="clusters processed in parallel")
    common.add_argument("--duc", action="store_const", const=True,
                        help="keep only <TEXT> bodies of SGML documents")
    common.add_argument("--min-sentence-tokens", metavar="N")
    common.add_argument("--config", metavar="FILE", help="key = value defaults")

    parser = _Parser(prog="tonesum", description="Tone-biased MMR multi-document summarization.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("summarize", parents=[common], help="print one summary per cluster")
    sub.add_parser("evaluate", parents=[common], help="ROUGE-1 against reference summaries")
    sub.add_parser("polarity-report", parents=[common], help="summary polarity vs. baseline")
    return parser


def _flags_from_namespace(ns):
    flags = {}
    for key in _FLAG_TYPES:
        attr = key.replace("-", "_")
        if hasattr(ns, attr):
            flags[key] = getattr(ns, attr)
    return flags


# --- running ---------------------------------------------------------------


def _summarize_safe(estimator, cluster_id, docs):
    try:
        return estimator.summarize({cluster_id: docs})[0]
    except DataError as exc:
        return exc


def _summaries(config, corpus, lambda_=None, bias=None):
    """Summaries (or the ``DataError`` raised) per cluster, sorted by id."""
    est = config.summarizer(lambda_=lambda_, bias=bias)
    ids = sorted(corpus)
    if config.jobs > 1 and len(ids) > 1:
        results = Parallel(n_jobs=config.jobs)(
            delayed(_summarize_safe)(est, cid, corpus[cid]) for cid in ids
        )
    else:
        results = [_summarize_safe(est, cid, corpus[cid]) for cid in ids]
    return dict(zip(ids, results))


def _load_corpus(config):
    if config.corpus_dir is None:
        raise ConfigError("--corpus is required")
    corpus = load_corpus(config.corpus_dir)
    if not corpus:
        raise DataError(f"no cluster directories under {config.corpus_dir}")
    return corpus


def _fmt(x):
    return f"{x:.4f}"


def _write_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _write_json(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _write_table(header, rows, note=None):
    table = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = [f"# {note}"] if note else []
    for r in table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_summarize(config, out):
    corpus = _load_corpus(config)
    results = _summaries(config, corpus)
    status = EXIT_OK
    ok = {}
    for cid, res in results.items():
        if isinstance(res, Exception):
            print(f"error: cluster {cid}: {res}", file=sys.stderr)
            status = EXIT_DATA
        else:
            ok[cid] = res

    if config.output_format == "json":
        out.write(_write_json([
            {
                "cluster_id": cid,
                "word_count": s.word_count,
                "sentences": [
                    {"doc_id": x.doc_id, "index": x.index, "text": x.original_text}
                    for x in s.sentences
                ],
            }
            for cid, s in ok.items()
        ]))
    elif config.output_format == "csv":
        rows = [
            (cid, x.doc_id, x.index, x.word_count, x.original_text)
            for cid, s in ok.items()
            for x in s.sentences
        ]
        out.write(_write_csv(("cluster_id", "doc_id", "index", "word_count", "text"), rows))
    else:
        blocks = [f"# {cid} ({s.word_count} words)\n{s.text}\n" for cid, s in ok.items()]
        out.write("\n".join(blocks))
    return status


def _evaluation_rows(config, corpus, lambda_):
    """Rows ``(cluster_id, score or None, status)`` plus the average."""
    results = _summaries(config, corpus, lambda_=lambda_)
    rows = []
    status = EXIT_OK
    for cid, res in results.items():
        if isinstance(res, Exception):
            print(f"error: cluster {cid}: {res}", file=sys.stderr)
            rows.append((cid, None, "error"))
            status = EXIT_DATA
            continue
        try:
            refs = load_references(config.refs_dir, cid, config.budget_words)
        except DataError as exc:
            print(f"error: cluster {cid}: {exc}", file=sys.stderr)
            rows.append((cid, None, "missing"))
            status = EXIT_DATA
            continue
        rows.append((cid, best_score(res.text, refs, config.stem_rouge), "ok"))
    scored = [r[1] for r in rows if r[1] is not None]
    average = mean_score(scored) if scored else None
    return rows, average, status


def cmd_evaluate(config, out):
    if config.refs_dir is None:
        raise ConfigError("evaluate needs --refs")
    corpus = _load_corpus(config)
    lambdas = config.lambda_sweep or (config.lambda_,)
    sweep = config.lambda_sweep is not None
    status = EXIT_OK
    tables = []
    for lam in lambdas:
        rows, average, st = _evaluation_rows(config, corpus, lam)
        status = max(status, st)
        tables.append((lam, rows, average))

    header = ("cluster_id", "recall", "precision", "f_score", "status")
    if sweep:
        header = ("lambda",) + header

    def cells(lam, cid, score, st):
        vals = ["", "", ""] if score is None else [_fmt(v) for v in score.as_tuple()]
        row = [cid, *vals, st]
        return [f"{lam:g}", *row] if sweep else row

    if config.output_format == "csv":
        rows = []
        for lam, table, average in tables:
            rows.extend(cells(lam, cid, sc, st) for cid, sc, st in table)
            if average is not None:
                rows.append(cells(lam, "AVERAGE", average, "ok"))
        out.write(_write_csv(header, rows))
    elif config.output_format == "json":
        objs = []
        for lam, table, average in tables:
            entries = list(table) + ([("AVERAGE", average, "ok")] if average is not None else [])
            for cid, sc, st in entries:
                obj = {"lambda": lam} if sweep else {}
                obj["cluster_id"] = cid
                for name, value in zip(("recall", "precision", "f_score"),
                                       sc.as_tuple() if sc else (None, None, None)):
                    obj[name] = None if value is None else round(value, 4)
                obj["status"] = st
                objs.append(obj)
        out.write(_write_json(objs))
    else:
        chunks = []
        for lam, table, average in tables:
            rows = [cells(lam, cid, sc, st)[-5:] for cid, sc, st in table]
            if average is not None:
                rows.append(cells(lam, "AVERAGE", average, "ok")[-5:])
            note = (f"ROUGE-1 lambda={lam:g} length={config.budget_words} bias={config.bias.value}; "
                    "AVERAGE is the arithmetic mean over clusters")
            chunks.append(_write_table(header[-5:], rows, note))
        out.write("\n".join(chunks))
    return status


def _reference_sentences(config, cid):
    path = reference_paths(config.refs_dir, cid, config.budget_words)[0]
    pre = SentencePreprocessor(stopwords=config.stopwords_path, min_sentence_tokens=0).fit()
    doc = RawDocument("reference", path.read_text(encoding="utf-8"))
    return preprocess_cluster([doc], pre.config_, f"{cid}-reference").sentences


def cmd_polarity_report(config, out):
    corpus = _load_corpus(config)
    est = config.summarizer()
    lexicon = est.lexicon_
    biased = _summaries(config, corpus)
    baseline_runs = None if config.refs_dir is not None else _summaries(config, corpus, bias=Bias.NONE)

    status = EXIT_OK
    rows = []
    for cid, res in biased.items():
        try:
            if isinstance(res, Exception):
                raise res
            if baseline_runs is None:
                base_sentences = _reference_sentences(config, cid)
            else:
                base = baseline_runs[cid]
                if isinstance(base, Exception):
                    raise base
                base_sentences = base.sentences
        except DataError as exc:
            print(f"error: cluster {cid}: {exc}", file=sys.stderr)
            status = EXIT_DATA
            continue
        bp = polarity_profile(res.sentences, lexicon)
        rp = polarity_profile(base_sentences, lexicon)
        n_pos, n_neg, n_neu = tag_counts(res.sentences, lexicon)
        rows.append((cid, bp, rp, (n_pos, n_neg, n_neu)))

    header = ("cluster_id", "biased_pos", "biased_neg", "baseline_pos", "baseline_neg",
              "n_pos", "n_neg", "n_neu")
    flat = [
        (cid, _fmt(bp.positive_mass), _fmt(bp.negative_mass),
         _fmt(rp.positive_mass), _fmt(rp.negative_mass), *counts)
        for cid, bp, rp, counts in rows
    ]
    if config.output_format == "json":
        out.write(_write_json([
            {
                "cluster_id": cid,
                "biased_pos": round(bp.positive_mass, 4),
                "biased_neg": round(bp.negative_mass, 4),
                "baseline_pos": round(rp.positive_mass, 4),
                "baseline_neg": round(rp.negative_mass, 4),
                "n_pos": counts[0],
                "n_neg": counts[1],
                "n_neu": counts[2],
            }
            for cid, bp, rp, counts in rows
        ]))
    elif config.output_format == "csv":
        out.write(_write_csv(header, flat))
    else:
        source = "reference summaries" if baseline_runs is None else "unbiased MMR summaries"
        note = f"polarity of {config.bias.value}-biased summaries vs. {source}; counts are for the biased summary"
        out.write(_write_table(header, flat, note))
    return status


_COMMANDS = {
    "summarize": cmd_summarize,
    "evaluate": cmd_evaluate,
    "polarity-report": cmd_polarity_report,
}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        config = load_config(_flags_from_namespace(ns), getattr(ns, "config", None))
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"tonesum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[ns.command](config, out)
    except ConfigError as exc:
        print(f"tonesum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, OSError) as exc:
        print(f"tonesum: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except TonesumError as exc:
        print(f"tonesum: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
