"""Command-line driver.

Subcommands:
    resolve  parse and resolve discourse files, print traces or records
    check    compare records output against sibling .expected files

Exit codes: 0 success, 1 check mismatch, 2 input/parse error, 3 resolution
error, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .discourse import parse_discourse, serialize_result
from .engine import resolve_discourse
from .errors import CenteringError, ParseError, ResolutionError
from .salience import LanguageConfig, load_empathy_lexicon, load_language_config


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="centering", description="Resolve zero pronouns in annotated discourse.")
    sub = parser.add_subparsers(dest="command", required=True)

    resolve = sub.add_parser("resolve", help="resolve discourse files and print results")
    resolve.add_argument("inputs", nargs="+", metavar="FILE", help="discourse (.disc) files")
    _add_language_options(resolve)
    resolve.add_argument(
        "--format",
        choices=("trace", "records"),
        default="trace",
        help="output mode (default: trace)",
    )
    resolve.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="include rejected candidates in trace output",
    )

    check = sub.add_parser("check", help="regression-check a corpus directory")
    check.add_argument(
        "directory",
        metavar="DIR",
        help="directory of .disc files with sibling .expected records",
    )
    _add_language_options(check)
    return parser


def _add_language_options(parser):
    parser.add_argument(
        "--lang",
        default="ja",
        metavar="ja|en|PATH",
        help="built-in language config, or path to a custom config file",
    )
    parser.add_argument(
        "--lexicon",
        metavar="PATH",
        help="extend the empathy lexicon from a file",
    )


def _load_config(opts) -> LanguageConfig:
    if opts.lang == "ja":
        config = LanguageConfig.japanese()
    elif opts.lang == "en":
        config = LanguageConfig.english()
    else:
        path = Path(opts.lang)
        if not path.is_file():
            raise FileNotFoundError(f"language config not found: {path}")
        config = load_language_config(path)
    if opts.lexicon:
        lexicon_path = Path(opts.lexicon)
        if not lexicon_path.is_file():
            raise FileNotFoundError(f"lexicon not found: {lexicon_path}")
        config = config.with_lexicon(load_empathy_lexicon(lexicon_path))
    return config


def _run_resolve(opts, config: LanguageConfig) -> int:
    chunks = []
    for name in opts.inputs:
        path = Path(name)
        if not path.is_file():
            print(f"centering: missing file: {path}", file=sys.stderr)
            return 2
        try:
            discourse = parse_discourse(path.read_text(encoding="utf-8"))
        except ParseError as exc:
            print(f"centering: {path}: {exc}", file=sys.stderr)
            return 2
        try:
            results = resolve_discourse(discourse, config)
        except ResolutionError as exc:
            print(f"centering: {path}: {exc}", file=sys.stderr)
            return 3
        if opts.format == "trace":
            chunks.append(f"# {path}\n")
        chunks.append(serialize_result(results, mode=opts.format, include_rejected=opts.verbose))
    sys.stdout.write("".join(chunks))
    return 0


def _run_check(opts, config: LanguageConfig) -> int:
    root = Path(opts.directory)
    if not root.is_dir():
        print(f"centering: missing directory: {root}", file=sys.stderr)
        return 2
    pairs = sorted(
        p for p in root.glob("*.disc") if p.with_suffix(".expected").is_file()
    )
    if not pairs:
        print(f"centering: no .disc/.expected pairs under {root}", file=sys.stderr)
        return 0
    rows = []
    failures = 0
    for path in pairs:
        note = ""
        try:
            discourse = parse_discourse(path.read_text(encoding="utf-8"))
            results = resolve_discourse(discourse, config)
            actual = serialize_result(results, mode="records")
            expected = path.with_suffix(".expected").read_text(encoding="utf-8")
            ok = actual == expected
            if not ok:
                note = "records differ"
        except CenteringError as exc:
            ok = False
            note = str(exc).splitlines()[0]
        rows.append((path.name, ok, note))
        failures += not ok
    width = max(len(name) for name, _, _ in rows)
    for name, ok, note in rows:
        line = f"{name:<{width}}  {'PASS' if ok else 'FAIL'}"
        if note:
            line += f"  ({note})"
        print(line)
    print(f"{len(rows) - failures}/{len(rows)} fixtures match")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    try:
        opts = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 64
    try:
        config = _load_config(opts)
    except (OSError, ParseError) as exc:
        print(f"centering: {exc}", file=sys.stderr)
        return 2
    if opts.command == "resolve":
        return _run_resolve(opts, config)
    return _run_check(opts, config)


if __name__ == "__main__":
    sys.exit(main())
