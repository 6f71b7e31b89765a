#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
CLI Display module for console output, report tables and search progress.
"""

import logging
from typing import Iterable, Optional, Sequence

from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.status import Status
from rich.table import Table
from rich.text import Text

from .config import Settings


class CLIDisplay:
    """CLI display manager: messages, tables and progress indicators."""

    def __init__(self, debug: bool = False, quiet: bool = False, no_color: bool = False):
        self.debug_mode = debug
        self.quiet = quiet
        self.console = Console(no_color=no_color, highlight=not no_color)
        self.logger = None
        self._setup_logging()

    def _setup_logging(self):
        """Set up logging with appropriate level and handlers."""
        root_logger = logging.getLogger()
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)

        if self.debug_mode:
            level = logging.DEBUG
        elif self.quiet:
            level = logging.WARNING
        else:
            level = logging.INFO

        rich_handler = RichHandler(
            console=self.console,
            rich_tracebacks=True,
            show_path=self.debug_mode,
            show_time=self.debug_mode,
            markup=False
        )

        if self.debug_mode:
            format_str = "[%(name)s] %(levelname)s %(message)s"
        else:
            format_str = "%(message)s"

        rich_handler.setFormatter(logging.Formatter(format_str))

        logging.basicConfig(
            level=level,
            format=format_str,
            handlers=[rich_handler],
            force=True
        )

        self.logger = logging.getLogger('tree_ramsey')

    def info(self, message: str, **kwargs):
        """Display info message."""
        if not self.quiet:
            if self.debug_mode:
                self.logger.info(f"[bold blue]ℹ️[/bold blue] {message}", extra={"markup": True})
            else:
                self.console.print(f"[bold blue]ℹ️[/bold blue] {message}", **kwargs)

    def success(self, message: str, **kwargs):
        """Display success message."""
        if not self.quiet:
            self.console.print(f"[bold green]✅[/bold green] {message}", **kwargs)

    def warning(self, message: str, **kwargs):
        """Display warning message."""
        self.console.print(f"[bold yellow]⚠️[/bold yellow] {message}", **kwargs)

    def error(self, message: str, **kwargs):
        """Display error message."""
        self.console.print(f"[bold red]❌[/bold red] {message}", **kwargs)

    def debug(self, message: str, **kwargs):
        """Display debug message."""
        if self.debug_mode:
            self.logger.debug(f"[dim]🔍[/dim] {message}", extra={"markup": True})

    def print_header(self, title: str, subtitle: Optional[str] = None):
        if self.quiet:
            return

        header_text = Text(title, style="bold magenta")
        if subtitle:
            header_text.append(f"\n{subtitle}", style="dim")

        panel = Panel(
            header_text,
            box=box.DOUBLE,
            padding=(1, 2),
            style="magenta"
        )
        self.console.print(panel)

    def print_config_info(self, settings: Settings):
        """Show the active settings; a full table in debug mode, one line otherwise."""
        if self.quiet:
            return

        if self.debug_mode:
            table = Table(title="[bold blue]🔧 Configuration[/bold blue]", box=box.ROUNDED)
            table.add_column("Setting", style="cyan", no_wrap=True)
            table.add_column("Value", style="white")
            for key in ("enumeration_cap", "node_budget", "time_budget", "workers", "mc_samples", "seed"):
                table.add_row(key, str(getattr(settings, key)))
            self.console.print(table)
        else:
            self.info(f"Node budget [bold cyan]{settings.node_budget}[/bold cyan], "
                      f"workers [bold cyan]{settings.workers}[/bold cyan]")

    def print_table(self, title: str, columns: Sequence[str], rows: Iterable[Sequence[object]]):
        """Tabular report: first column cyan, the rest white."""
        if self.quiet:
            return
        table = Table(title=f"[bold blue]{title}[/bold blue]", box=box.ROUNDED)
        for index, column in enumerate(columns):
            table.add_column(column, style="cyan" if index == 0 else "white", no_wrap=index == 0)
        for row in rows:
            table.add_row(*(str(cell) for cell in row))
        self.console.print(table)

    def print_verdict(self, verdict):
        if verdict:
            self.success("Witness verified: [bold green]PASS[/bold green]")
        else:
            self.error(f"Witness rejected: [bold red]{verdict.condition}[/bold red] "
                       f"at address [bold cyan]{verdict.address or '∅'}[/bold cyan]")
            if verdict.detail:
                self.console.print(f"[dim]{verdict.detail}[/dim]", markup=True, highlight=False)

    def print_report(self, text: str):
        """Print a rendered plain-text report verbatim."""
        if not self.quiet:
            self.console.print(text, markup=False, highlight=False, end="")

    def create_search_progress(self, initial_status: str = "Searching...") -> 'SearchProgress':
        return SearchProgress(self.console, self.quiet, initial_status)

    def print_file_saved(self, file_path: str, file_type: str = "file"):
        if self.debug_mode:
            self.success(f"Saved {file_type}: [bold cyan]{file_path}[/bold cyan]")
        else:
            self.success(f"Wrote {file_type}")

    def print_summary(self, exit_code: int, details: Optional[str] = None):
        """Print the outcome line for an exit code."""
        if exit_code == 0:
            self.success("✨ Done")
        elif exit_code == 1:
            self.warning("Nothing found (search space exhausted or check failed)")
        elif exit_code == 2:
            self.warning("Search budget exhausted before an answer")
        else:
            self.error("💥 Invalid input")

        if details and (self.debug_mode or exit_code != 0):
            self.console.print(f"[dim]{details}[/dim]")


class SearchProgress:
    """Spinner shown while a search or an enumeration runs."""

    def __init__(self, console: Console, quiet: bool = False, initial_status: str = "Initializing..."):
        self.console = console
        self.quiet = quiet
        self.status = None

        if not quiet:
            self.status = Status(initial_status, console=console, spinner="dots")

    def __enter__(self):
        if self.status:
            self.status.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.status:
            self.status.stop()

    def update_stage(self, stage: str):
        if self.status:
            self.status.update(f"🔎 [bold blue]{stage}[/bold blue]")

    def update_custom(self, message: str, emoji: str = "⚙️"):
        if self.status:
            self.status.update(f"{emoji} {message}")


# Global display instance
_display_instance = None


def get_display() -> CLIDisplay:
    """Get the global display instance."""
    global _display_instance
    if _display_instance is None:
        _display_instance = CLIDisplay()
    return _display_instance


def setup_display(debug: bool = False, quiet: bool = False, no_color: bool = False) -> CLIDisplay:
    """Setup the global display instance with specific settings."""
    global _display_instance
    _display_instance = CLIDisplay(debug=debug, quiet=quiet, no_color=no_color)
    return _display_instance
