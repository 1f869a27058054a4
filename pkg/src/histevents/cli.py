"""Pipeline driver: crawl -> extract -> enrich -> store -> export/serve.

Exit codes: 0 success, 2 config error, 3 source error, 4 storage error.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import enrichment, export, extractor, ingest, profiles, store as store_mod

EXIT_CONFIG = 2
EXIT_SOURCE = 3
EXIT_STORAGE = 4


def _load_profiles(path: str | None):
    try:
        if path:
            return profiles.load_profiles(path)
        return profiles.load_default_profiles()
    except (OSError, profiles.ConfigError) as exc:
        raise click.exceptions.Exit(EXIT_CONFIG) from _fail(f"profile config: {exc}")


def _fail(msg: str):
    click.echo(f"error: {msg}", err=True)
    return None


def _source_for(lang: str, corpus: str | None, live: bool) -> ingest.PageSource:
    if live:
        return ingest.live_source(lang)
    if not corpus:
        _fail("either --corpus or --live is required")
        raise click.exceptions.Exit(EXIT_CONFIG)
    try:
        return ingest.offline_source(corpus, lang)
    except ValueError as exc:
        _fail(str(exc))
        raise click.exceptions.Exit(EXIT_SOURCE)


@click.group()
def main():
    """Historical event extraction from Wikipedia year articles."""


@main.command()
@click.option("--languages", "-l", required=True, help="comma-separated language codes")
@click.option("--start", type=int, required=True, help="first year (negative = BCE)")
@click.option("--end", type=int, required=True, help="last year, inclusive")
@click.option("--corpus", type=click.Path(), help="offline corpus root (default mode)")
@click.option("--live", is_flag=True, help="fetch from the live Wikipedia API")
@click.option("--profiles", "profiles_path", type=click.Path(exists=True))
@click.option("--store", "store_path", default="events.db", show_default=True)
@click.option("--enrich", is_flag=True, help="also assign images in this run")
@click.option("--report", "report_path", type=click.Path(), help="failure log path")
@click.option("--workers", default=4, show_default=True)
def extract(languages, start, end, corpus, live, profiles_path, store_path,
            enrich, report_path, workers):
    """Fetch year pages in range and extract their events into the store.

    Prints one tab-separated summary line per language:
    lang, pages, candidates, extracted, failures, quotient.
    """
    if start > end:
        _fail("--start must be <= --end")
        raise click.exceptions.Exit(EXIT_CONFIG)
    prof_map = _load_profiles(profiles_path)
    langs = [l.strip().lower() for l in languages.split(",") if l.strip()]
    missing = [l for l in langs if l not in prof_map]
    if missing:
        _fail(f"no profile for language(s): {', '.join(missing)}")
        raise click.exceptions.Exit(EXIT_CONFIG)

    try:
        db = store_mod.EventStore(store_path)
    except Exception as exc:
        _fail(f"cannot open store: {exc}")
        raise click.exceptions.Exit(EXIT_STORAGE)

    years = [y for y in range(start, end + 1) if y != 0]
    totals = {}
    all_reports = []
    for lang in langs:
        profile = prof_map[lang]
        db.register_category_aliases(profile.category_headings)
        source = _source_for(lang, corpus, live)

        def process(year, profile=profile, source=source):
            title = profiles.year_title(profile, year)
            try:
                page = ingest.fetch_page(source, title)
            except ingest.PageNotFound:
                return None
            return extractor.extract_page(page.wikitext, title, profile, year=year)

        results = []
        try:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for res in pool.map(process, years):
                    if res is not None:
                        results.append(res)
        except ingest.TransportError as exc:
            _fail(f"source unreachable for {lang}: {exc} (partial progress persisted)")
            raise click.exceptions.Exit(EXIT_SOURCE)

        stats = {"pages": 0, "candidates": 0, "extracted": 0, "failures": 0}
        for events, report in results:
            if enrich:
                cache = enrichment.ImageCache()
                events = [enrichment.assign_image(e, source, cache, profile)
                          for e in events]
            try:
                db.upsert_events(events)
            except Exception as exc:
                _fail(f"storage failure: {exc}")
                raise click.exceptions.Exit(EXIT_STORAGE)
            stats["pages"] += 1
            stats["candidates"] += report.candidate_count
            stats["extracted"] += report.extracted_count
            stats["failures"] += len(report.failures)
            all_reports.append(report)
        totals[lang] = stats

    if report_path:
        extractor.write_failure_log(all_reports, report_path)
        with open(Path(report_path).with_suffix(".jsonl"), "a", encoding="utf-8") as fh:
            for rep in all_reports:
                fh.write(json.dumps({
                    "source_title": rep.source_title, "lang": rep.lang,
                    "candidate_count": rep.candidate_count,
                    "extracted_count": rep.extracted_count,
                    "failures": [dataclasses.asdict(f) for f in rep.failures],
                    "quotient": rep.quotient,
                }, ensure_ascii=False) + "\n")

    click.echo("lang\tpages\tcandidates\textracted\tfailures\tquotient")
    for lang, s in totals.items():
        quotient = s["extracted"] / s["candidates"] if s["candidates"] else 1.0
        click.echo(f"{lang}\t{s['pages']}\t{s['candidates']}\t{s['extracted']}"
                   f"\t{s['failures']}\t{quotient:.4f}")


@main.command()
@click.option("--languages", "-l", required=True)
@click.option("--corpus", type=click.Path())
@click.option("--live", is_flag=True)
@click.option("--profiles", "profiles_path", type=click.Path(exists=True))
@click.option("--store", "store_path", default="events.db", show_default=True)
def enrich(languages, corpus, live, profiles_path, store_path):
    """Assign images to stored events that do not have one yet."""
    prof_map = _load_profiles(profiles_path)
    db = store_mod.EventStore(store_path)
    langs = [l.strip().lower() for l in languages.split(",") if l.strip()]
    assigned = 0
    for lang in langs:
        if lang not in prof_map:
            _fail(f"no profile for language {lang}")
            raise click.exceptions.Exit(EXIT_CONFIG)
        profile = prof_map[lang]
        source = _source_for(lang, corpus, live)
        cache = enrichment.ImageCache()
        batch = []
        for ev in db.all_events():
            if ev.lang != lang or ev.image is not None:
                continue
            enriched = enrichment.assign_image(ev, source, cache, profile)
            if enriched.image is not None:
                batch.append(enriched)
        if batch:
            db.upsert_events(batch)
            assigned += len(batch)
    click.echo(f"images assigned\t{assigned}")


@main.command("export")
@click.option("--store", "store_path", default="events.db", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["xml", "json", "n3"]), default="n3")
@click.option("--out", type=click.Path(), help="output file (default stdout)")
@click.option("--base-uri", default="http://example.org/historical-events/")
def export_cmd(store_path, fmt, out, base_uri):
    """Serialize the whole store in the chosen format."""
    db = store_mod.EventStore(store_path)
    events = db.all_events()
    mapping = export.LodeMapping(base_uri=base_uri)
    if fmt == "json":
        body = export.to_json(events)
    elif fmt == "xml":
        body = export.to_xml(events)
    else:
        body = export.to_n3(events, mapping)
    if out:
        Path(out).write_text(body, encoding="utf-8")
        click.echo(f"wrote {len(events)} events to {out}")
    else:
        click.echo(body, nl=False)


@main.command()
@click.option("--store", "store_path", default="events.db", show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8080, show_default=True)
def serve(store_path, host, port):
    """Run the query API (GET /search, /healthz)."""
    import uvicorn

    from .service import create_app

    db = store_mod.EventStore(store_path)
    uvicorn.run(create_app(db), host=host, port=port)


@main.command()
@click.option("--report", "report_path", type=click.Path(exists=True), required=True,
              help="the .jsonl report file written by extract")
def report(report_path):
    """Summarize per-page extraction reports."""
    click.echo("lang\ttitle\tcandidates\textracted\tfailures\tquotient")
    for line in Path(report_path).read_text("utf-8").splitlines():
        if not line.strip():
            continue
        rep = json.loads(line)
        click.echo(f"{rep['lang']}\t{rep['source_title']}\t{rep['candidate_count']}"
                   f"\t{rep['extracted_count']}\t{len(rep['failures'])}"
                   f"\t{rep['quotient']:.4f}")


if __name__ == "__main__":
    main()
