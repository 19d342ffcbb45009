"""Thin command-line client for the report service.

The CLI reads the input file, posts it to the /report endpoint and writes
the rendered bytes through untouched. By default the service runs
in-process over an ASGI transport, so no server needs to be started;
--server points the same client at a live deployment instead.

Exit codes: 0 success, 2 input error, 3 configuration error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import httpx

from . import __version__

_INPUT_ERROR = 2
_CONFIG_ERROR = 3


def _post_report(server: str | None, payload: dict[str, object]) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=60.0) as client:
            return client.post("/report", json=payload)

    import asyncio

    from .service import app  # deferred: keeps --help/--version fast

    async def _run() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://rulemine.internal") as client:
            return await client.post("/report", json=payload)

    return asyncio.run(_run())


def _detail_line(response: httpx.Response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        return response.text.strip().splitlines()[0] if response.text.strip() else "no detail"
    if isinstance(detail, list) and detail:
        first = detail[0]
        location = ".".join(str(part) for part in first.get("loc", ()) if part != "body")
        return f"{location}: {first.get('msg')}" if location else str(first.get("msg"))
    return str(detail)


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, "--version")
@click.option("--input", "input_path", required=True, help="Dataset file to mine.")
@click.option("--format", "input_format", default="basket", show_default=True,
              help="Input format: basket or matrix.")
@click.option("--min-support", default="0.1", show_default=True,
              help="Minimum itemset support, a decimal in [0, 1].")
@click.option("--min-confidence", default="0.5", show_default=True,
              help="Minimum rule confidence, a decimal in [0, 1].")
@click.option("--measures", default=None,
              help="Comma-separated measure tokens, or 'all' for the full catalogue.")
@click.option("--sort-by", default=None, help="Measure token to sort rules by.")
@click.option("--sort-dir", default="desc", show_default=True, help="Sort direction: asc or desc.")
@click.option("--top-k", default=None, help="Keep only the first K rules after sorting.")
@click.option("--output", default="table", show_default=True, help="Output format: table, csv or json.")
@click.option("--precision", default="3", show_default=True,
              help="Decimal places for rounded output, 1 to 12.")
@click.option("--out", "out_path", default=None, help="Write the report to a file instead of stdout.")
@click.option("--server", default=None,
              help="Base URL of a running rulemine service; default runs it in-process.")
def main(
    input_path: str,
    input_format: str,
    min_support: str,
    min_confidence: str,
    measures: str | None,
    sort_by: str | None,
    sort_dir: str,
    top_k: str | None,
    output: str,
    precision: str,
    out_path: str | None,
    server: str | None,
) -> None:
    """Mine association rules from a transaction file and emit a scored report."""
    try:
        content = Path(input_path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        click.echo(f"input error: {exc}", err=True)
        raise SystemExit(_INPUT_ERROR)

    payload: dict[str, object] = {
        "dataset": {"format": input_format, "content": content},
        "min_support": min_support,
        "min_confidence": min_confidence,
        "sort_dir": sort_dir,
        "precision": precision,
        "output": output,
    }
    if measures is not None:
        payload["measures"] = measures
    if sort_by is not None:
        payload["sort_by"] = sort_by
    if top_k is not None:
        payload["top_k"] = top_k

    try:
        response = _post_report(server, payload)
    except httpx.HTTPError as exc:
        click.echo(f"service error: {exc}", err=True)
        raise SystemExit(_INPUT_ERROR)

    if response.status_code == 200:
        try:
            if out_path is not None:
                Path(out_path).write_bytes(response.content)
            else:
                sys.stdout.buffer.write(response.content)
                sys.stdout.buffer.flush()
        except OSError as exc:
            click.echo(f"input error: {exc}", err=True)
            raise SystemExit(_INPUT_ERROR)
        return

    if response.status_code == 422:
        click.echo(f"configuration error: {_detail_line(response)}", err=True)
        raise SystemExit(_CONFIG_ERROR)
    if response.status_code == 400:
        click.echo(f"input error: {_detail_line(response)}", err=True)
        raise SystemExit(_INPUT_ERROR)
    click.echo(f"service error (HTTP {response.status_code}): {_detail_line(response)}", err=True)
    raise SystemExit(_INPUT_ERROR)


if __name__ == "__main__":
    main()
