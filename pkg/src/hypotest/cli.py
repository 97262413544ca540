"""Command-line interface.

Subcommands: ingest, test, network, report, serve, relations export.
Shared options resolve in the order CLI flag > HYPOTEST_* env var >
--config file > built-in default.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import Config, ConfigError, load_config
from .corpus import CorpusError
from .engine import Engine, UnknownEntityError
from .hypothesis import HypothesisError
from .lexicon import LexiconError
from .network import export_network

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypotest",
        description="Test natural-language hypotheses against a text corpus "
                    "and explore the surrounding relation network.")
    parser.add_argument("--config", type=Path, default=None,
                        help="TOML or JSON config file")
    parser.add_argument("--data-dir", type=Path, default=None,
                        help="state directory (corpus + relations)")
    parser.add_argument("--lexicon", type=Path, default=None,
                        help="entity lexicon JSONL (default: bundled)")
    parser.add_argument("--negation-words", type=Path, default=None,
                        help="negation word list (default: bundled)")
    parser.add_argument("--relation-verbs", type=Path, default=None,
                        help="relation verb list (default: bundled)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="load a JSONL corpus and extract relations")
    p_ingest.add_argument("corpus", type=Path, help="corpus JSONL file")

    p_test = sub.add_parser("test", help="test a hypothesis sentence")
    p_test.add_argument("--hypothesis", required=True, help="hypothesis sentence")
    p_test.add_argument("--expected", type=float, required=True,
                        help="expected number of supporting papers (e)")
    p_test.add_argument("--alpha", type=float, default=0.05)
    p_test.add_argument("--mode", choices=["strict", "path"], default="strict")
    p_test.add_argument("--match-predicate", action="store_true",
                        help="require the corpus predicate to match the hypothesis verb")
    p_test.add_argument("--json", action="store_true", dest="as_json",
                        help="machine-readable output")

    p_network = sub.add_parser("network", help="build the secondary network around entities")
    p_network.add_argument("--entity", action="append", required=True,
                           help="seed entity (repeatable)")
    p_network.add_argument("--max-hops", type=int, default=2,
                           help="hop bound; negative means unbounded")
    p_network.add_argument("--format", choices=["dot", "json"], default="json")
    p_network.add_argument("--positive-only", action="store_true")
    p_network.add_argument("--output", type=Path, default=None,
                           help="write to file instead of stdout")

    p_report = sub.add_parser(
        "report", help="run a test and write CSVs plus figures to a directory")
    p_report.add_argument("--hypothesis", required=True)
    p_report.add_argument("--expected", type=float, required=True)
    p_report.add_argument("--alpha", type=float, default=0.05)
    p_report.add_argument("--mode", choices=["strict", "path"], default="strict")
    p_report.add_argument("--match-predicate", action="store_true")
    p_report.add_argument("--max-hops", type=int, default=2)
    p_report.add_argument("--outdir", type=Path, default=Path("report"))

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--listen", default=None, help="host:port")
    p_serve.add_argument("--static-dir", type=Path, default=None,
                         help="built web UI to serve under /")

    p_relations = sub.add_parser("relations", help="relation store utilities")
    rel_sub = p_relations.add_subparsers(dest="relations_command", required=True)
    p_export = rel_sub.add_parser("export", help="dump stored relations")
    p_export.add_argument("--format", choices=["jsonl"], default="jsonl")
    p_export.add_argument("--output", type=Path, default=None)

    return parser


def _resolve_config(args: argparse.Namespace) -> Config:
    config = load_config(args.config)
    if args.data_dir is not None:
        config.data_dir = args.data_dir
    if args.lexicon is not None:
        config.lexicon = args.lexicon
    if args.negation_words is not None:
        config.negation_words = args.negation_words
    if args.relation_verbs is not None:
        config.relation_verbs = args.relation_verbs
    config.validate()
    return config


def _build_engine(config: Config) -> Engine:
    return Engine(
        data_dir=config.data_dir,
        lexicon_path=config.lexicon,
        negation_path=config.negation_words,
        verbs_path=config.relation_verbs,
    )


def _print_result(result, out) -> None:
    h = result.hypothesis
    sign = "+" if int(h.polarity) > 0 else "-"
    print(f"hypothesis: {h.source_text}", file=out)
    print(f"normal form: ({h.subject}, {h.predicate}, {h.object}, {sign}1)", file=out)
    print(f"observed (o): {result.observed} of {result.total} papers", file=out)
    print(f"expected (e): {result.expected:g}", file=out)
    print(f"chi-square: {result.chi2:.6f}", file=out)
    print(f"p-value: {result.p_value:.6f}", file=out)
    print(f"decision: {result.decision.value} (alpha={result.alpha:g}, "
          f"mode={result.mode})", file=out)
    if result.supporting_doc_ids:
        print("supporting documents: " + ", ".join(result.supporting_doc_ids),
              file=out)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        config = _resolve_config(args)

        if args.command == "ingest":
            engine = _build_engine(config)
            summary = engine.ingest_file(args.corpus)
            print(f"ingested {summary.ingested} documents, "
                  f"added {summary.relations_added} relations "
                  f"({len(engine.store)} total)", file=out)
            return 0

        if args.command == "test":
            engine = _build_engine(config)
            result = engine.test(args.hypothesis, args.expected,
                                 alpha=args.alpha, mode=args.mode,
                                 match_predicate=args.match_predicate)
            if args.as_json:
                print(json.dumps(result.to_json(), indent=2), file=out)
            else:
                _print_result(result, out)
            return 0

        if args.command == "network":
            engine = _build_engine(config)
            max_hops = None if args.max_hops < 0 else args.max_hops
            network = engine.network(args.entity, max_hops=max_hops,
                                     positive_only=args.positive_only)
            payload = export_network(network, args.format)
            if args.output is not None:
                args.output.write_bytes(payload)
                print(f"wrote {args.output}", file=out)
            else:
                out.write(payload.decode("utf-8"))
            return 0

        if args.command == "report":
            from .report import write_report

            engine = _build_engine(config)
            result = engine.test(args.hypothesis, args.expected,
                                 alpha=args.alpha, mode=args.mode,
                                 match_predicate=args.match_predicate)
            network = engine.network_for(result.hypothesis,
                                         max_hops=args.max_hops)
            written = write_report(result, network, args.outdir,
                                   evidence=engine.evidence_for(result))
            _print_result(result, out)
            for path in written:
                print(f"wrote {path}", file=out)
            return 0

        if args.command == "serve":
            import uvicorn

            from .api import create_app

            if args.listen is not None:
                config.listen = args.listen
            if args.static_dir is not None:
                config.static_dir = args.static_dir
            engine = _build_engine(config)
            if config.corpus is not None:
                summary = engine.ingest_file(config.corpus)
                print(f"seeded {summary.ingested} documents "
                      f"({summary.relations_added} new relations)", file=out)
            app = create_app(engine, alpha=config.alpha,
                             max_hops=config.max_hops,
                             static_dir=config.static_dir)
            host, port = config.host_port()
            uvicorn.run(app, host=host, port=port, log_level="info")
            return 0

        if args.command == "relations":
            engine = _build_engine(config)
            lines = engine.store.export_jsonl()
            if args.output is not None:
                with args.output.open("w", encoding="utf-8") as fh:
                    for line in lines:
                        fh.write(line + "\n")
                print(f"wrote {args.output}", file=out)
            else:
                for line in lines:
                    print(line, file=out)
            return 0

    except UnknownEntityError as exc:
        print(f"error: unknown entity {exc.name!r}", file=sys.stderr)
        return 1
    except (ConfigError, CorpusError, LexiconError, HypothesisError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    parser.error(f"unknown command {args.command!r}")
    return 2  # pragma: no cover


if __name__ == "__main__":
    raise SystemExit(main())
