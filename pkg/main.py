#!/usr/bin/env python3
"""
drg-eval - Main Entry Point

Validate, convert and score Simplified Box Notation DRS corpora, and project
named entities from English DRSs onto a parallel target language.
"""

import asyncio
import json
import logging
import sys
import tomllib
from functools import wraps
from pathlib import Path
from typing import Callable, List, Optional

import click

from config.constants import CONVERT_TARGETS, GRANULARITIES, OUTPUT_FORMATS
from config.settings import settings
from src.align.ibm1 import IbmModel1, align_sentence
from src.align.io import (
    alignments_to_tsv, audit_to_tsv, dictionary_to_tsv, read_dictionary, read_parallel_corpus,
    read_patches, read_table, table_to_tsv,
)
from src.align.pipeline import run_pipeline
from src.align.replacer import apply_patches, replace_names
from src.metrics.formatters import render_report
from src.metrics.parallel import corpus_report_async
from src.metrics.report import corpus_report
from src.models import FineGrainedReport, Granularity, RunConfig
from src.penman.renderer import to_penman
from src.penman.triples import extract_triples, triples_to_tsv
from src.sbn.corpus import load_vocabulary, parse_document, read_corpus, render_corpus
from src.sbn.serializer import serialize_sbn
from src.sbn.validator import check_document
from src.smatch.matcher import corpus_smatch
from src.ui.progress import ProgressReporter
from src.ui.report_view import show_pipeline_summary, show_report, show_validation
from src.utils.error_handler import (
    DrgEvalError, LengthMismatchError, configure_logging, display_error, log_error,
)

logger = logging.getLogger("drg_eval")

EXIT_FAILED = 1
EXIT_IO = 2

existing_file = click.Path(exists=True, dir_okay=False, path_type=Path)
output_file = click.Path(dir_okay=False, writable=True, path_type=Path)


def get_version() -> str:
    """Read version from pyproject.toml."""
    try:
        pyproject_path = Path(__file__).parent / "pyproject.toml"
        with open(pyproject_path, "rb") as f:
            data = tomllib.load(f)
            return data["project"]["version"]
    except Exception:
        return "1.0.0"  # Fallback version


def cli_errors(func: Callable) -> Callable:
    """Map toolkit errors to exit status 1 and file-system errors to 2."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DrgEvalError as e:
            log_error(e, "DEBUG")
            display_error(e)
            sys.exit(EXIT_IO if isinstance(e.__cause__, OSError) else EXIT_FAILED)
        except OSError as e:
            display_error(e)
            sys.exit(EXIT_IO)
    return wrapper


def emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", output)


def vocabulary_options(func: Callable) -> Callable:
    func = click.option("--discourse", "discourse_path", type=existing_file,
                        help="File of discourse relation labels, one per line.")(func)
    func = click.option("--operators", "operators_path", type=existing_file,
                        help="File of comparison operator labels, one per line.")(func)
    return func


def skip_nationality_option(func: Callable) -> Callable:
    return click.option(
        "--skip-nationality/--no-skip-nationality", default=None,
        help="Never replace country names reached through a Source role (default: on).",
    )(func)


@click.group()
@click.version_option(get_version(), prog_name="drg-eval")
@click.option("-v", "--verbose", count=True, help="Log more (-v info, -vv debug).")
@click.option("--log-file", type=output_file, help="Also write log records to this file.")
def cli(verbose: int, log_file: Optional[Path]) -> None:
    """Tools for Simplified Box Notation DRSs."""
    level = {0: "WARNING", 1: "INFO"}.get(verbose, "DEBUG")
    configure_logging(level, str(log_file) if log_file else None)


@cli.command()
@click.argument("corpus", type=existing_file)
@vocabulary_options
@click.option("-o", "--output", type=output_file, help="Write per-document reports as JSON.")
@cli_errors
def validate(corpus: Path, operators_path, discourse_path, output: Optional[Path]) -> None:
    """Check that every document of CORPUS parses into a well-formed DRG."""
    vocabulary = load_vocabulary(operators_path, discourse_path)
    documents = read_corpus(corpus)
    reports = [check_document(d.text, vocabulary, origin=d.id) for d in documents]

    show_validation(reports)
    if output is not None:
        payload = [r.model_dump(mode="json") for r in reports]
        emit(json.dumps(payload, ensure_ascii=False, indent=2) + "\n", output)
    if not all(r.well_formed for r in reports):
        sys.exit(EXIT_FAILED)


@cli.command()
@click.argument("corpus", type=existing_file)
@click.option("--to", "target", type=click.Choice(CONVERT_TARGETS), default="penman", show_default=True)
@click.option("--granularity", type=click.Choice(GRANULARITIES), default="coarse", show_default=True)
@vocabulary_options
@click.option("-o", "--output", type=output_file)
@cli_errors
def convert(corpus: Path, target: str, granularity: str, operators_path, discourse_path, output) -> None:
    """Convert CORPUS to Penman text, triple TSV, or normalized SBN."""
    vocabulary = load_vocabulary(operators_path, discourse_path)
    granularity = Granularity(granularity)
    blocks: List[str] = []
    for document in read_corpus(corpus):
        drg = parse_document(document, vocabulary)
        if target == "penman":
            blocks.append(f"# ::id {document.id}\n{to_penman(drg, granularity)}")
        elif target == "triples":
            blocks.append(f"# id: {document.id}\n{triples_to_tsv(extract_triples(drg, granularity), header=False)}".rstrip("\n"))
        else:
            blocks.append(render_corpus([(document.id, serialize_sbn(drg))]).rstrip("\n"))
    emit("\n\n".join(blocks) + ("\n" if blocks else ""), output)


@cli.command()
@click.argument("pred", type=existing_file)
@click.argument("gold", type=existing_file)
@click.option("--restarts", type=click.IntRange(min=1), default=None, help="Hill-climbing restarts (default 4).")
@click.option("--seed", type=int, default=None, help="Random seed (default 0, or $DRG_EVAL_SEED).")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None)
@click.option("--granularity", type=click.Choice(GRANULARITIES), default="coarse", show_default=True,
              help="Granularity used by --smatch-only.")
@click.option("--smatch-only", is_flag=True, help="Print corpus Smatch only.")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes.")
@click.option("--show/--no-show", default=False, help="Also draw the report as a table on stderr.")
@vocabulary_options
@click.option("-o", "--output", type=output_file)
@cli_errors
def score(pred, gold, restarts, seed, output_format, granularity, smatch_only, jobs, show,
          operators_path, discourse_path, output) -> None:
    """Score the predictions in PRED against GOLD."""
    restarts = settings.smatch.restarts if restarts is None else restarts
    seed = settings.smatch.seed if seed is None else seed
    jobs = settings.report.jobs if jobs is None else jobs
    output_format = output_format or settings.report.default_format
    vocabulary = load_vocabulary(operators_path, discourse_path)
    pred_docs, gold_docs = read_corpus(pred), read_corpus(gold)

    run_config = RunConfig(
        subcommand="score", inputs=[str(pred), str(gold)], granularity=Granularity(granularity),
        restarts=restarts, seed=seed,
        operators_path=str(operators_path) if operators_path else None,
        discourse_path=str(discourse_path) if discourse_path else None,
        output_format=output_format, jobs=jobs,
    )

    if smatch_only:
        if len(pred_docs) != len(gold_docs):
            raise LengthMismatchError(len(pred_docs), len(gold_docs))
        pairs = [
            (extract_triples(parse_document(p, vocabulary), run_config.granularity),
             extract_triples(parse_document(g, vocabulary), run_config.granularity))
            for p, g in zip(pred_docs, gold_docs)
        ]
        result = corpus_smatch(pairs, restarts, seed)
        emit(f"Precision: {result.precision:.4f}\nRecall: {result.recall:.4f}\nF-score: {result.f1:.4f}\n", output)
        return

    with ProgressReporter() as progress:
        progress.start_progress("Scoring documents", total=len(gold_docs))
        if jobs > 1:
            report = asyncio.run(corpus_report_async(
                pred_docs, gold_docs, restarts, seed, vocabulary, jobs,
                tool_version=get_version(), progress_callback=progress.callback(),
            ))
        else:
            report = corpus_report(
                pred_docs, gold_docs, restarts, seed, vocabulary,
                tool_version=get_version(), progress_callback=progress.callback(),
            )

    if show:
        show_report(report)
    emit(render_report(report, output_format, run_config), output)


@cli.command()
def schema() -> None:
    """Print the JSON schema of score reports."""
    click.echo(json.dumps(FineGrainedReport.model_json_schema(), indent=2, sort_keys=True))


@cli.command("align-train")
@click.argument("parallel", type=existing_file)
@click.option("--iterations", type=click.IntRange(min=1), default=None, help="EM iterations (default 20).")
@click.option("-o", "--output", type=output_file)
@cli_errors
def align_train(parallel: Path, iterations: Optional[int], output: Optional[Path]) -> None:
    """Train an IBM Model 1 translation table on a PARALLEL TSV corpus."""
    sentences = read_parallel_corpus(parallel)
    model = IbmModel1()
    with ProgressReporter() as progress:
        progress.start_progress("Training IBM Model 1")
        table = model.train(sentences, iterations)
    logger.info("Log-likelihood per iteration: %s", ", ".join(f"{ll:.4f}" for ll in model.history))
    emit(table_to_tsv(table), output)


@cli.command()
@click.argument("parallel", type=existing_file)
@click.option("--table", "table_path", type=existing_file, required=True, help="Translation table TSV.")
@click.option("-o", "--output", type=output_file)
@cli_errors
def align(parallel: Path, table_path: Path, output: Optional[Path]) -> None:
    """Align every sentence pair of PARALLEL with a trained table."""
    table = read_table(table_path)
    alignments = [(s.id, align_sentence(table, s)) for s in read_parallel_corpus(parallel)]
    emit(alignments_to_tsv(alignments), output)


@cli.command("replace-ne")
@click.argument("corpus", type=existing_file)
@click.option("--dictionary", "dictionary_path", type=existing_file, required=True, help="Name dictionary TSV.")
@click.option("--patch", "patch_path", type=existing_file, help="Manual corrections TSV.")
@skip_nationality_option
@vocabulary_options
@click.option("--audit", type=output_file, help="Write the per-name audit TSV here.")
@click.option("-o", "--output", type=output_file)
@cli_errors
def replace_ne(corpus, dictionary_path, patch_path, skip_nationality, operators_path, discourse_path,
               audit, output) -> None:
    """Rewrite Name literals of CORPUS using a name dictionary."""
    vocabulary = load_vocabulary(operators_path, discourse_path)
    dictionary = read_dictionary(dictionary_path)
    patches = read_patches(patch_path) if patch_path else []

    documents, reports = [], []
    for document in read_corpus(corpus):
        drg = parse_document(document, vocabulary)
        replaced, report = replace_names(drg, dictionary.for_sentence(document.id), skip_nationality)
        replaced, report = apply_patches(drg, replaced, report, patches)
        documents.append((document.id, serialize_sbn(replaced)))
        reports.append(report)

    show_pipeline_summary(reports)
    if audit is not None:
        emit(audit_to_tsv(reports), audit)
    emit(render_corpus(documents), output)


@cli.command()
@click.argument("parallel", type=existing_file)
@click.argument("corpus", type=existing_file)
@click.option("--table", "table_path", type=existing_file, help="Use this table instead of training one.")
@click.option("--iterations", type=click.IntRange(min=1), default=None, help="EM iterations (default 20).")
@click.option("--patch", "patch_path", type=existing_file, help="Manual corrections TSV.")
@skip_nationality_option
@vocabulary_options
@click.option("--audit", type=output_file, help="Write the per-name audit TSV here.")
@click.option("--dictionary", "dictionary_output", type=output_file, help="Write the name dictionary TSV here.")
@click.option("-o", "--output", type=output_file)
@cli_errors
def pipeline(parallel, corpus, table_path, iterations, patch_path, skip_nationality,
             operators_path, discourse_path, audit, dictionary_output, output) -> None:
    """Align PARALLEL, extract names and rewrite the English SBN CORPUS."""
    vocabulary = load_vocabulary(operators_path, discourse_path)
    sentences = read_parallel_corpus(parallel)
    documents = read_corpus(corpus)
    table = read_table(table_path) if table_path else None
    patches = read_patches(patch_path) if patch_path else []

    with ProgressReporter() as progress:
        progress.start_progress("Projecting names", total=len(sentences))
        result = run_pipeline(
            sentences, documents, table=table, iterations=iterations, patches=patches,
            skip_nationality=skip_nationality, vocabulary=vocabulary,
            progress_callback=progress.callback(),
        )

    show_pipeline_summary(result.reports)
    if dictionary_output is not None:
        emit(dictionary_to_tsv(result.dictionary), dictionary_output)
    if audit is not None:
        emit(audit_to_tsv(result.reports), audit)
    emit(render_corpus(result.documents), output)


def main() -> None:
    """Main entry point."""
    try:
        cli(standalone_mode=True)
    except KeyboardInterrupt:
        click.echo("Operation cancelled by user.", err=True)
        sys.exit(130)


if __name__ == "__main__":
    main()
