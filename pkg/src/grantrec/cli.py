"""Command-line front end: thin wrappers over the core package.

    grantrec ingest --root data/ --out corpus.json --table keywords.tsv
    grantrec taxonomy stats --table keywords.tsv
    grantrec score surface --grant g1 --corpus corpus.json --table keywords.tsv --out surface.json
    grantrec mine --corpus corpus.json --grant g1 --out rules.json
    grantrec score historical --grant g1 --corpus corpus.json --rules rules.json --out historical.json
    grantrec recommend --grant g1 --alpha 0.5 --threshold 0.4 \
        --surface surface.json --historical historical.json --format table
    grantrec serve --config service.json
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import jsonio
from .assoc import MiningParams
from .corpus import DocKind, fetch_remote
from .dataset import load_dataset, load_root, save_dataset
from .errors import GrantRecError
from .pipeline import historical_channel, surface_channel
from .recommend import WeightParams, rank_candidates, render_report
from .taxonomy import load_keyword_table


def _cmd_ingest(args) -> int:
    table = load_keyword_table(args.table) if args.table else None
    dataset = load_root(args.root, table, args.stopwords, args.lexicon)
    save_dataset(dataset, args.out)
    print(
        f"ingested {dataset.corpus.document_count} documents, "
        f"{len(dataset.researchers)} researchers -> {args.out}"
    )
    return 0


def _cmd_taxonomy_stats(args) -> int:
    table = load_keyword_table(args.table)
    print(f"categories:    {table.category_count}")
    print(f"subcategories: {table.subcategory_count}")
    print(f"fields:        {table.field_count}")
    print(f"keywords:      {table.keyword_count}")
    return 0


def _cmd_score_surface(args) -> int:
    dataset = load_dataset(args.corpus)
    table = load_keyword_table(args.table)
    matches = surface_channel(dataset, table, args.grant)
    jsonio.dump_json(jsonio.surface_file_dict(args.grant, matches), args.out)
    print(f"scored {len(matches)} researcher(s) -> {args.out}")
    return 0


def _cmd_score_historical(args) -> int:
    dataset = load_dataset(args.corpus)
    rules_data = jsonio.load_json(args.rules)
    if rules_data.get("grant_id") != args.grant:
        raise GrantRecError(
            f"rules file is for grant {rules_data.get('grant_id')!r}, not {args.grant!r}"
        )
    rules = jsonio.rules_from_file_dict(rules_data)
    matches = historical_channel(dataset, args.grant, rules)
    jsonio.dump_json(jsonio.historical_file_dict(args.grant, matches), args.out)
    print(f"scored {len(matches)} researcher(s) -> {args.out}")
    return 0


def _cmd_mine(args) -> int:
    from .pipeline import mine_grant_rules

    dataset = load_dataset(args.corpus)
    params = MiningParams(args.min_support, args.min_confidence, args.max_width)
    rules = mine_grant_rules(dataset, args.grant, params)
    jsonio.dump_json(jsonio.rules_file_dict(args.grant, params, rules), args.out)
    print(f"mined {len(rules)} rule(s) -> {args.out}")
    return 0


def _cmd_recommend(args) -> int:
    surface_data = jsonio.load_json(args.surface)
    historical_data = jsonio.load_json(args.historical)
    for name, data in (("surface", surface_data), ("historical", historical_data)):
        if data.get("grant_id") != args.grant:
            raise GrantRecError(
                f"{name} file is for grant {data.get('grant_id')!r}, not {args.grant!r}"
            )
    surface = [jsonio.surface_match_from_dict(m) for m in surface_data["matches"]]
    historical = [
        jsonio.historical_match_from_dict(m) for m in historical_data["matches"]
    ]
    ranked = rank_candidates(
        args.grant, surface, historical, WeightParams.from_alpha(args.alpha),
        args.threshold,
    )
    report = render_report(ranked, args.format)
    if args.out:
        Path(args.out).write_text(report if report.endswith("\n") else report + "\n", "utf-8")
        print(f"wrote {args.format} report -> {args.out}")
    else:
        print(report, end="" if report.endswith("\n") else "\n")
    return 0


def _cmd_fetch(args) -> int:
    doc = fetch_remote(args.uri)
    out = Path(args.out)
    out.write_text(doc.body, "utf-8")
    kind = "html" if doc.kind is DocKind.HTML else "text"
    print(f"fetched {args.uri} ({kind}) -> {out}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app, load_config

    config = load_config(args.config)
    if args.host:
        config.host = args.host
    if args.port:
        config.port = args.port
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grantrec",
        description="Rank researchers against grant calls by fused keyword and rule scores.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="read a data root into a corpus file")
    p.add_argument("--root", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--table", help="keyword table; keywords join the token lexicon")
    p.add_argument("--stopwords", help="extra stopwords, one per line")
    p.add_argument("--lexicon", help="extra noun phrases, one per line")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("taxonomy", help="keyword table utilities")
    tax_sub = p.add_subparsers(dest="taxonomy_command", required=True)
    stats = tax_sub.add_parser("stats", help="print level counts")
    stats.add_argument("--table", required=True)
    stats.set_defaults(func=_cmd_taxonomy_stats)

    p = sub.add_parser("score", help="compute channel scores")
    score_sub = p.add_subparsers(dest="score_command", required=True)
    surface = score_sub.add_parser("surface", help="keyword-match channel")
    surface.add_argument("--grant", required=True)
    surface.add_argument("--corpus", required=True)
    surface.add_argument("--table", required=True)
    surface.add_argument("--out", required=True)
    surface.set_defaults(func=_cmd_score_surface)
    historical = score_sub.add_parser("historical", help="rule-match channel")
    historical.add_argument("--grant", required=True)
    historical.add_argument("--corpus", required=True)
    historical.add_argument("--rules", required=True)
    historical.add_argument("--out", required=True)
    historical.set_defaults(func=_cmd_score_historical)

    p = sub.add_parser("mine", help="mine association rules for a grant")
    p.add_argument("--corpus", required=True)
    p.add_argument("--grant", required=True)
    p.add_argument("--min-support", type=float, default=0.05)
    p.add_argument("--min-confidence", type=float, default=0.5)
    p.add_argument("--max-width", type=int, default=3)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_mine)

    p = sub.add_parser("recommend", help="fuse channel files into a ranked report")
    p.add_argument("--grant", required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--threshold", type=float, default=0.4)
    p.add_argument("--surface", required=True)
    p.add_argument("--historical", required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_recommend)

    p = sub.add_parser("fetch", help="download one document (optional plumbing)")
    p.add_argument("--uri", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_fetch)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GrantRecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
