"""Command-line entry points.

    candle run --config <file> [--stages a,b,c]
    candle kb query --kb <file> [--subject S] [--facet F] [--concept C]
                    [--min-score X] [--format jsonl|table]
    candle validate-config --config <file>
    candle report --config <file>

Exit codes: 0 success, 1 config error, 2 stage failure, 3 provider failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import load_config
from .errors import CatalogError, ConfigError, ProviderError, StageError
from .kbstore import KbIndex, query, record_to_dict
from .pipeline import STAGES, Pipeline, format_report_table

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_STAGE = 2
EXIT_PROVIDER = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="candle", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run pipeline stages")
    run.add_argument("--config", required=True)
    run.add_argument("--stages", help=f"comma-separated subset of: {','.join(STAGES)}")

    kb = sub.add_parser("kb", help="knowledge-base operations")
    kb_sub = kb.add_subparsers(dest="kb_command", required=True)
    kb_query = kb_sub.add_parser("query", help="query a written KB file")
    kb_query.add_argument("--kb", required=True)
    kb_query.add_argument("--subject")
    kb_query.add_argument("--facet")
    kb_query.add_argument("--concept")
    kb_query.add_argument("--min-score", type=float)
    kb_query.add_argument("--format", choices=("jsonl", "table"), default="jsonl")

    validate = sub.add_parser("validate-config", help="check a config file and its catalog")
    validate.add_argument("--config", required=True)

    report = sub.add_parser("report", help="print stage metrics of the last run")
    report.add_argument("--config", required=True)
    return parser


def _cmd_run(args) -> int:
    config = load_config(args.config)
    stages = None
    if args.stages:
        stages = [s.strip() for s in args.stages.split(",") if s.strip()]
        unknown = set(stages) - set(STAGES)
        if unknown:
            raise ConfigError(f"unknown stage(s): {sorted(unknown)}")
    pipeline = Pipeline(config)
    reports = pipeline.run(stages)
    print(format_report_table([r.to_dict() for r in reports]))
    print(f"KB written to {config.output_kb}")
    return EXIT_OK


def _cmd_kb_query(args) -> int:
    index = KbIndex.load(args.kb)
    records = query(
        index,
        subject=args.subject,
        facet=args.facet,
        concept=args.concept,
        min_score=args.min_score,
    )
    if args.format == "jsonl":
        for r in records:
            print(json.dumps(record_to_dict(r), ensure_ascii=False))
    else:
        print(f"{'subject':<16}{'facet':<12}{'score':>7}  summary")
        for r in records:
            print(f"{r.subject:<16}{r.facet:<12}{r.feature_scores.combined:>7.3f}  {r.summary}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    config = load_config(args.config)
    from .catalog import load_catalog

    catalog = load_catalog(config.catalog_path)
    config.pattern_set()
    print(
        f"config OK: {len(catalog.domains)} domain(s), {len(catalog)} subject(s), "
        f"providers={config.provider_mode}"
    )
    return EXIT_OK


def _cmd_report(args) -> int:
    config = load_config(args.config)
    path = Path(config.checkpoint_dir) / "reports.json"
    if not path.exists():
        raise StageError(f"no reports at {path}: run the pipeline first")
    saved = json.loads(path.read_text(encoding="utf-8"))
    ordered = [saved[s] for s in STAGES if s in saved]
    print(format_report_table(ordered))
    return EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = _build_parser().parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "kb": _cmd_kb_query,
        "validate-config": _cmd_validate,
        "report": _cmd_report,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, CatalogError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ProviderError as exc:
        print(f"provider failure: {exc}", file=sys.stderr)
        return EXIT_PROVIDER
    except StageError as exc:
        print(f"stage failure: {exc}", file=sys.stderr)
        return EXIT_STAGE
    except OSError as exc:
        print(f"stage failure: {exc}", file=sys.stderr)
        return EXIT_STAGE


if __name__ == "__main__":
    sys.exit(main())
