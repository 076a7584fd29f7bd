"""Command-line interface: ``translit {train,syllabify,tag,transliterate,evaluate}``.

Payload goes to standard output, diagnostics to standard error.  Exit codes:
0 success, 1 usage error, 2 data or model error.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import os
import sys

from .corpus import load_model, parse_corpus, save_model, train_model
from .corpus.entries import EntityCategory
from .decoder import DecodeOptions, top_k, transliterate_sentence, transliterate_word
from .errors import TranslitError
from .evaluation import evaluate_corpus
from .ner import load_gazetteer, tag_tokens, tokenize_sentence
from .script import DEFAULT_DIGRAPHS, DEFAULT_VOWELS, ScriptProfile
from .syllabifier import hyphenate

log = logging.getLogger("translit")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
SYNOPSIS = "usage: translit {train,syllabify,tag,transliterate,evaluate} [options]"
MODEL_ENV = "TRANSLIT_MODEL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_profile_flags(p):
    p.add_argument("--vowels", help="vowel letters, e.g. 'aeiou'")
    p.add_argument("--digraphs", help="comma-separated consonant digraphs")
    p.add_argument("--no-merge-vowels", action="store_true",
                   help="keep repeated vowels as separate units")


def _add_gazetteer_flags(p):
    p.add_argument("--persons", metavar="FILE")
    p.add_argument("--locations", metavar="FILE")


def _add_io_flags(p):
    p.add_argument("--in", dest="input", metavar="FILE", help="input file (default: stdin)")
    p.add_argument("--out", dest="output", metavar="FILE", help="output file (default: stdout)")


def _add_decode_flags(p):
    p.add_argument("--lm-weight", type=float, default=0.0)
    p.add_argument("--beam", type=int, default=5)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="translit", description="English to Punjabi (Gurmukhi) transliteration")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a model from a parallel corpus")
    p.add_argument("--corpus", required=True, metavar="FILE")
    p.add_argument("--out", required=True, metavar="MODEL")
    _add_gazetteer_flags(p)
    _add_profile_flags(p)

    p = sub.add_parser("syllabify", help="print hyphen-joined syllables")
    _add_io_flags(p)
    _add_profile_flags(p)

    p = sub.add_parser("tag", help="print token<TAB>TAG lines")
    _add_gazetteer_flags(p)
    _add_io_flags(p)

    p = sub.add_parser("transliterate", help="transliterate words or sentences")
    p.add_argument("--model", metavar="MODEL", help=f"model file (default: ${MODEL_ENV})")
    _add_gazetteer_flags(p)
    _add_decode_flags(p)
    p.add_argument("--nbest", type=int, metavar="K")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--words", action="store_true", help="one word per line, no tagging")
    mode.add_argument("--sentences", action="store_true", help="full tagging pipeline (default)")
    p.add_argument("--tag", default="OTHER", help="entity tag in --words mode")
    p.add_argument("--show-syllables", action="store_true")
    _add_io_flags(p)

    p = sub.add_parser("evaluate", help="exact-match accuracy on a test corpus")
    p.add_argument("--model", metavar="MODEL", help=f"model file (default: ${MODEL_ENV})")
    p.add_argument("--test", required=True, metavar="FILE")
    p.add_argument("--predicted-tags", action="store_true")
    p.add_argument("--rows", metavar="FILE", help="write per-row TSV outcomes here")
    _add_gazetteer_flags(p)
    _add_decode_flags(p)
    return parser


def _profile(args) -> ScriptProfile:
    vowels = frozenset(args.vowels) if args.vowels else DEFAULT_VOWELS
    if args.digraphs is not None:
        digraphs = tuple(d.strip() for d in args.digraphs.split(",") if d.strip())
    else:
        digraphs = DEFAULT_DIGRAPHS
    return ScriptProfile(vowels, digraphs, not args.no_merge_vowels)


def _decode_options(args) -> DecodeOptions:
    try:
        return DecodeOptions(lm_weight=args.lm_weight, beam_width=args.beam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _model_path(args) -> str:
    path = args.model or os.environ.get(MODEL_ENV)
    if not path:
        raise UsageError(f"--model is required (or set {MODEL_ENV})")
    return path


@contextlib.contextmanager
def _open_in(path, stdin):
    if path is None:
        yield stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path, stdout):
    if path is None:
        yield stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit(out, line):
    out.write(line + "\n")
    out.flush()


# -- subcommands -----------------------------------------------------------------

def cmd_train(args, stdin, stdout):
    profile = _profile(args)
    with open(args.corpus, encoding="utf-8") as fh:
        entries = parse_corpus(fh, profile)
    gazetteer = None
    if args.persons or args.locations:
        gazetteer = load_gazetteer(args.persons, args.locations)
    model, stats = train_model(entries, profile, gazetteer=gazetteer)
    save_model(model, args.out)
    _emit(stdout, f"entries\t{len(entries)}")
    for name, t in (("ne", stats.ne), ("general", stats.general)):
        _emit(stdout, f"{name}\tused={t.entries_used}\tskipped={t.entries_skipped}"
                      f"\tpairs={t.pairs}\tsources={t.sources}")
    _emit(stdout, f"lm\thistories={len(model.lm.unigram_counts)}\tbigrams={len(model.lm)}")
    if stats.reclassified:
        _emit(stdout, f"reclassified\t{stats.reclassified}")
    return EXIT_OK


def cmd_syllabify(args, stdin, stdout):
    profile = _profile(args)
    with _open_in(args.input, stdin) as src, _open_out(args.output, stdout) as out:
        for lineno, line in enumerate(src, start=1):
            words = []
            for word in line.split():
                try:
                    words.append(hyphenate(word, profile))
                except TranslitError as exc:
                    log.warning("line %d: %s", lineno, exc)
                    words.append(word)
            _emit(out, " ".join(words))
    return EXIT_OK


def cmd_tag(args, stdin, stdout):
    gazetteer = load_gazetteer(args.persons, args.locations)
    with _open_in(args.input, stdin) as src, _open_out(args.output, stdout) as out:
        for i, line in enumerate(src):
            if i:
                _emit(out, "")
            for tok in tag_tokens(tokenize_sentence(line), gazetteer):
                _emit(out, f"{tok.text}\t{tok.tag.value}")
    return EXIT_OK


def _warn_candidate(word, cand, lineno):
    if cand.degraded:
        log.warning("line %d: %r used the fallback map (%s)", lineno, word, cand.trace())


def cmd_transliterate(args, stdin, stdout):
    opts = _decode_options(args)
    if args.nbest is not None and args.nbest < 1:
        raise UsageError("--nbest must be positive")
    if args.nbest is not None and not args.words:
        raise UsageError("--nbest requires --words")
    try:
        tag = EntityCategory.parse(args.tag)
    except TranslitError as exc:
        raise UsageError(f"--tag: {exc}") from None
    model = load_model(_model_path(args))
    gazetteer = load_gazetteer(args.persons, args.locations)

    with _open_in(args.input, stdin) as src, _open_out(args.output, stdout) as out:
        for lineno, line in enumerate(src, start=1):
            text = line.strip()
            if args.words:
                _emit(out, _words_line(text, tag, model, opts, args, lineno))
                continue
            result, details = transliterate_sentence(text, model, gazetteer, opts)
            for d in details:
                if d.error:
                    log.warning("line %d: %r left as is: %s", lineno, d.token.text, d.error)
                elif d.candidate.degraded:
                    _warn_candidate(d.token.text, d.candidate, lineno)
            if args.show_syllables:
                trace = " | ".join(d.trace() for d in details)
                result = f"{result}\t{trace}"
            _emit(out, result)
    return EXIT_OK


def _words_line(word, tag, model, opts, args, lineno):
    if not word:
        return ""
    try:
        if args.nbest is not None:
            cands = top_k(word, tag, model, opts, args.nbest)
        else:
            cands = [transliterate_word(word, tag, model, opts)]
    except TranslitError as exc:
        log.warning("line %d: %r left as is: %s", lineno, word, exc)
        return word
    _warn_candidate(word, cands[0], lineno)
    if args.nbest is not None:
        fields = []
        for c in cands:
            fields += [c.target, f"{c.score:.8f}"]
            if args.show_syllables:
                fields.append(c.trace())
        return "\t".join(fields)
    if args.show_syllables:
        return f"{cands[0].target}\t{cands[0].trace()}"
    return cands[0].target


def cmd_evaluate(args, stdin, stdout):
    opts = _decode_options(args)
    model = load_model(_model_path(args))
    gazetteer = load_gazetteer(args.persons, args.locations)
    with open(args.test, encoding="utf-8") as fh:
        entries = parse_corpus(fh, model.profile)
    report = evaluate_corpus(model, entries, gazetteer, opts, args.predicted_tags)
    _emit(stdout, report.format())
    if args.rows:
        with open(args.rows, "w", encoding="utf-8") as fh:
            fh.write("source\tgold\tpredicted\ttag\tcorrect\n")
            for row in report.rows:
                fh.write(row.tsv() + "\n")
    return EXIT_OK


COMMANDS = {
    "train": cmd_train,
    "syllabify": cmd_syllabify,
    "tag": cmd_tag,
    "transliterate": cmd_transliterate,
    "evaluate": cmd_evaluate,
}


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("translit: %(levelname)s: %(message)s"))
    root = logging.getLogger("translit")
    root.addHandler(handler)
    try:
        try:
            args = build_parser().parse_args(argv)
        except UsageError as exc:
            stderr.write(f"translit: error: {exc}\n{SYNOPSIS}\n")
            return EXIT_USAGE
        root.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
        try:
            return COMMANDS[args.command](args, stdin, stdout)
        except UsageError as exc:
            stderr.write(f"translit: error: {exc}\n{SYNOPSIS}\n")
            return EXIT_USAGE
        except (TranslitError, OSError, ValueError) as exc:
            stderr.write(f"translit: {type(exc).__name__}: {exc}\n")
            return EXIT_DATA
    finally:
        root.removeHandler(handler)


def main() -> None:
    for stream in (sys.stdin, sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
