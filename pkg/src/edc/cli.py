"""Command-line front door.

Subcommands: ``schedule`` (epoch/difficulty table), ``transform``
(curriculum-modified corpus as JSONL), ``sweep`` (per-epoch statistics to
a .dat file), ``stopwords`` (vendored vocabulary), and ``serve`` (a
line-delimited JSON request/response loop over stdio for training-loop
shims). Exit codes: 0 success, 1 runtime error, 2 usage error.
"""

import argparse
import json
import os
import sys

from edc.corpus import Corpus, CorpusFormatError, load_clotho_csv, load_jsonl, tokenize_corpus
from edc.curriculum import TransformConfig, render, transform_batch
from edc.schedule import DEFAULT_FLOOR, DifficultySchedule, alpha_for_max_epoch, difficulty, schedule_table
from edc.stats import emit_dat, sweep
from edc.text import classify, load_stopwords, tokenize

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

STOPWORDS_ENV_VAR = "EDC_STOPWORDS"
DEFAULT_SEED = 42
_U64_MAX = (1 << 64) - 1


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value <= _U64_MAX:
        raise argparse.ArgumentTypeError(f"must be an unsigned 64-bit integer, got {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _add_schedule_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=None,
                        help="difficulty rate; overrides the --max-epoch lookup")
    parser.add_argument("--max-epoch", type=_non_negative_int, default=None,
                        help="training length; resolves alpha when --alpha is absent")
    parser.add_argument("--floor", type=float, default=DEFAULT_FLOOR,
                        help="minimum difficulty level (default %(default)s)")


def _resolve_schedule(args, parser, need_range: bool, fallback_max_epoch: int = 0) -> DifficultySchedule:
    """Build the schedule from --alpha/--max-epoch per the CLI contract."""
    if args.alpha is None and args.max_epoch is None:
        parser.error("one of --alpha or --max-epoch is required")
    if need_range and args.max_epoch is None:
        parser.error("--max-epoch is required to bound the epoch range")
    if args.alpha is not None:
        alpha = args.alpha
        max_epoch = args.max_epoch if args.max_epoch is not None else fallback_max_epoch
    else:
        alpha = alpha_for_max_epoch(args.max_epoch)
        max_epoch = args.max_epoch
    try:
        return DifficultySchedule(alpha=alpha, max_epoch=max_epoch, floor=args.floor)
    except ValueError as exc:
        parser.error(str(exc))


def _load_corpus(path: str) -> Corpus:
    if path.endswith(".csv"):
        return load_clotho_csv(path)
    if path.endswith(".jsonl"):
        return load_jsonl(path)
    raise CorpusFormatError(f"{path}: unsupported input format (expected .csv or .jsonl)")


def _resolve_stopwords(explicit_path: str | None):
    if explicit_path:
        return load_stopwords(explicit_path)
    env_path = os.environ.get(STOPWORDS_ENV_VAR)
    if env_path:
        return load_stopwords(env_path)
    return load_stopwords()


def _cmd_schedule(args, parser) -> int:
    schedule = _resolve_schedule(args, parser, need_range=True)
    sep = "," if args.format == "csv" else "\t"
    sys.stdout.write(f"epoch{sep}difficulty\n")
    for epoch, level in schedule_table(schedule):
        sys.stdout.write(f"{epoch}{sep}{level:.6f}\n")
    return EXIT_OK


def _cmd_transform(args, parser) -> int:
    schedule = _resolve_schedule(args, parser, need_range=False, fallback_max_epoch=args.epoch)
    stopwords = _resolve_stopwords(args.stopwords)
    corpus = _load_corpus(args.input)
    config = TransformConfig(seed=args.seed, schedule=schedule, stopwords=stopwords)
    prepared = tokenize_corpus(corpus, stopwords)
    outputs = transform_batch(prepared, args.epoch, config)
    level = difficulty(schedule, args.epoch)
    for record, caption, output in zip(corpus.records, prepared, outputs):
        line = json.dumps({
            "id": record.source_id,
            "ordinal": caption.ordinal,
            "epoch": args.epoch,
            "difficulty": level,
            "original": record.text,
            "modified": render(output),
        })
        sys.stdout.write(line + "\n")
    return EXIT_OK


def _cmd_sweep(args, parser) -> int:
    schedule = _resolve_schedule(args, parser, need_range=True)
    stopwords = _resolve_stopwords(None)
    corpus = _load_corpus(args.input)
    results = sweep(corpus, schedule, args.seed, args.batch_size, stopwords=stopwords)
    emit_dat(results, args.out)
    return EXIT_OK


def _cmd_stopwords(args, parser) -> int:
    stopwords = load_stopwords()
    sys.stdout.write(f"# {stopwords.version_tag}\n")
    for word in sorted(stopwords.words):
        sys.stdout.write(word + "\n")
    return EXIT_OK


def _serve_request(obj, config: TransformConfig):
    if not isinstance(obj, dict):
        raise ValueError("request must be a JSON object")
    epoch = obj.get("epoch")
    if not isinstance(epoch, int) or isinstance(epoch, bool) or epoch < 0:
        raise ValueError("field 'epoch' must be a non-negative integer")
    items = obj.get("captions")
    if not isinstance(items, list):
        raise ValueError("field 'captions' must be an array")
    captions = []
    for pos, item in enumerate(items):
        if not isinstance(item, dict):
            raise ValueError(f"captions[{pos}] must be an object")
        ident = item.get("id")
        ordinal = item.get("ordinal")
        text = item.get("text")
        if not isinstance(ident, str):
            raise ValueError(f"captions[{pos}]: field 'id' must be a string")
        if not isinstance(ordinal, int) or isinstance(ordinal, bool) or ordinal < 0:
            raise ValueError(f"captions[{pos}]: field 'ordinal' must be a non-negative integer")
        if not isinstance(text, str):
            raise ValueError(f"captions[{pos}]: field 'text' must be a string")
        captions.append(classify(tokenize(text, source_id=ident, ordinal=ordinal), config.stopwords))
    outputs = transform_batch(captions, epoch, config)
    return {
        "captions": [
            {"id": c.source_id, "ordinal": c.ordinal, "modified": render(out)}
            for c, out in zip(captions, outputs)
        ]
    }


def serve_stdio(fin, fout, config: TransformConfig) -> int:
    """One JSON request per line in, one JSON response per line out.

    A malformed line produces an {"error": ...} response and the loop
    continues; EOF terminates cleanly.
    """
    for line in fin:
        if not line.strip():
            continue
        try:
            response = _serve_request(json.loads(line), config)
        except Exception as exc:
            response = {"error": str(exc)}
        fout.write(json.dumps(response) + "\n")
        fout.flush()
    return EXIT_OK


def _cmd_serve(args, parser) -> int:
    schedule = _resolve_schedule(args, parser, need_range=False)
    stopwords = _resolve_stopwords(None)
    config = TransformConfig(seed=args.seed, schedule=schedule, stopwords=stopwords)
    return serve_stdio(sys.stdin, sys.stdout, config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edc",
        description="Epoch-driven difficulty curriculum for caption training targets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schedule", help="print the epoch/difficulty table")
    _add_schedule_flags(p)
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.set_defaults(func=_cmd_schedule)

    p = sub.add_parser("transform", help="apply the curriculum to a corpus, JSONL to stdout")
    p.add_argument("--input", required=True, help="corpus file (.csv or .jsonl)")
    p.add_argument("--epoch", type=_non_negative_int, required=True)
    _add_schedule_flags(p)
    p.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
    p.add_argument("--stopwords", default=None, help="alternate stopword file")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("sweep", help="write per-epoch statistics to a .dat file")
    p.add_argument("--input", required=True, help="corpus file (.csv or .jsonl)")
    _add_schedule_flags(p)
    p.add_argument("--batch-size", type=_positive_int, default=64)
    p.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
    p.add_argument("--out", required=True, help="output .dat path")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("stopwords", help="print the vendored stopword list")
    p.add_argument("action", nargs="?", choices=("list",), default="list")
    p.set_defaults(func=_cmd_stopwords)

    p = sub.add_parser("serve", help="line-delimited JSON transform server over stdio")
    p.add_argument("--stdio", action="store_true", required=True,
                   help="serve requests on stdin/stdout (the only mode)")
    _add_schedule_flags(p)
    p.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except BrokenPipeError:
        return EXIT_RUNTIME
    except (OSError, ValueError) as exc:
        print(f"edc: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
