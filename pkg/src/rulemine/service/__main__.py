"""Serve the API: ``python -m rulemine.service`` or the rulemine-serve script."""

import click
import uvicorn

from .app import app


@click.command()
@click.option("--host", default="127.0.0.1", show_default=True, help="Bind address.")
@click.option("--port", default=8000, show_default=True, type=int, help="Bind port.")
def main(host: str, port: int) -> None:
    """Run the rulemine HTTP service."""
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
