"""
axipot/utils/terminal_utils.py

Rich rendering for command-line reports.
"""

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from axipot.data_models.verification import InvariantCheck


def checks_table(checks: list[InvariantCheck]) -> Table:
    """One row per check: name, residual, tolerance, verdict."""
    table = Table(box=box.ROUNDED, show_lines=False)
    table.add_column("check", style="cyan")
    table.add_column("residual", justify="right")
    table.add_column("tolerance", justify="right")
    table.add_column("", justify="center")
    table.add_column("detail", style="dim")
    for check in checks:
        verdict = "[green]pass[/green]" if check.passed else "[bold red]FAIL[/bold red]"
        table.add_row(check.name, f"{check.residual:.2e}", f"{check.tolerance:.0e}", verdict, check.detail)
    return table


def print_checks(console: Console, m: complex, checks: list[InvariantCheck]) -> None:
    """The verify report: a summary panel and the table."""
    failed = [check.name for check in checks if not check.passed]
    if failed:
        summary = f"[bold red]{len(failed)} of {len(checks)} checks failed[/bold red]: {', '.join(failed)}"
    else:
        summary = f"[bold green]all {len(checks)} checks passed[/bold green]"
    console.print(Panel(summary, title=f"invariants for m = {m.real:g}{m.imag:+g}i", box=box.ROUNDED))
    console.print(checks_table(checks))
