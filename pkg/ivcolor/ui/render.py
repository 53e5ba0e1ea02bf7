from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

console = Console()
err_console = Console(stderr=True)


def _status(ok, message):
    if ok:
        console.print(Text(f"✅ {message}", style="green"))
    else:
        console.print(Text(f"❌ {message}", style="red"))


def _witness_lines(record):
    witness = record.get("witness") or {}
    parts = []
    if witness.get("vertex") is not None:
        parts.append(f"vertex {witness['vertex']}")
    if witness.get("edge") is not None:
        parts.append(f"edge {tuple(witness['edge'])}")
    if witness.get("color") is not None:
        parts.append(f"color {witness['color']}")
    return ", ".join(parts)


def show_error(message):
    err_console.print(Text(f"❌ {message}", style="red"))


def show_gen(record):
    if record["manifest"]["outputs"]:
        _status(True, f"{record['family']}: {record['vertices']} vertices, {record['edges']} edges "
                      f"-> {record['manifest']['outputs'][0]}")
    else:
        console.out(record["text"], end="", highlight=False)


def show_verify(record):
    """Verdict line, and the failing vertex or edge when the coloring is rejected."""
    if record["verdict"] == "valid":
        _status(True, f"valid interval {record['t']}-coloring")
    else:
        _status(False, f"invalid ({record['kind']}): {record['reason']}")
        where = _witness_lines(record)
        if where:
            console.print(f"   witness: [yellow]{where}[/yellow]")
    if record.get("claimed_verdict") and record["claimed_verdict"] != record["verdict"]:
        console.print(Text(f"⚠️  file claimed '{record['claimed_verdict']}'", style="yellow"))
    if "shortcut_t" in record:
        console.print(f"   connected-graph check: {record['shortcut_t']}")


def show_construct(record):
    show_verify(record)
    console.print(f"   certificate: [cyan]{record['certificate']}[/cyan]")
    if record.get("dot"):
        console.print(f"   dot: [cyan]{record['dot']}[/cyan]")


def _outcome_table(outcomes, title):
    table = Table(title=title)
    table.add_column("t", style="cyan", justify="right")
    table.add_column("Status", style="green")
    table.add_column("Nodes", style="magenta", justify="right")
    table.add_column("Seconds", style="yellow", justify="right")
    for outcome in outcomes:
        table.add_row(str(outcome["t"]), outcome["status"], f"{outcome['nodes']:,}", f"{outcome['seconds']:.3f}")
    return table


def show_search(record):
    mode = record["mode"]
    if mode == "t":
        line = f"{record['source']}: t={record['t']} {record['status']} after {record['nodes']:,} nodes"
        if record["status"] == "budget_exceeded":
            console.print(Text(f"⚠️  {line} (inconclusive: {record['reason']})", style="yellow"))
        else:
            _status(record["status"] == "found", line)
    elif mode == "stat":
        console.print(_outcome_table(record["outcomes"], f"{record['stat']} scan of {record['source']}"))
        if not record["conclusive"]:
            console.print(Text(f"⚠️  {record['stat']}: inconclusive, a budget ran out", style="yellow"))
        else:
            found = record["value"] is not None
            _status(found, f"{record['stat']}({record['source']}) = {record['value'] if found else 'none'}")
    else:
        console.print(_outcome_table(record["outcomes"], f"spectrum of {record['source']}"))
        feasible = [t for t, verdict in record["profile"].items() if verdict == "exists"]
        console.print(f"   feasible t: [cyan]{', '.join(feasible) or 'none'}[/cyan]")
    for path in record["manifest"]["outputs"]:
        console.print(f"   certificate: [cyan]{path}[/cyan]")


def show_bounds(record):
    table = Table(title=f"Bounds for {record['family']}")
    table.add_column("Kind", style="cyan")
    table.add_column("Source", style="green")
    table.add_column("Value", style="magenta", justify="right")
    for bound in record["lower_bounds"]:
        table.add_row("W >=", bound["source"], str(bound["value"]))
    for bound in record["upper_bounds"]:
        table.add_row("W <=", bound["source"], str(bound["value"]))
    for key, label in (("w", "w ="), ("W", "W ="), ("w_ceiling", "w <="), ("constructed_t", "built t"),
                       ("oracle_w", "oracle w"), ("oracle_W", "oracle W")):
        if record.get(key) is not None:
            table.add_row(label, "", str(record[key]))
    console.print(table)

    facts = []
    if record["interval_colorable"] is not None:
        facts.append(f"interval colorable: {'yes' if record['interval_colorable'] else 'no'}")
    if record["guaranteed_range"]:
        low, high = record["guaranteed_range"]
        facts.append(f"every t in [{low}, {high}] is realizable")
    if record.get("planar"):
        facts.append(f"planarity: {record['planar']['kind']}")
    facts.extend(record["notes"])
    if facts:
        console.print(Panel("\n".join(facts), title="Facts", border_style="blue"))
    for problem in record["violations"]:
        _status(False, problem)


def show_matrix(record):
    table = Table(title=f"Matrix: {record['suite']}")
    table.add_column("Instance", style="cyan", no_wrap=True)
    table.add_column("Mode", style="green")
    table.add_column("t", justify="right")
    table.add_column("Expected", justify="right")
    table.add_column("Lower", justify="right", style="magenta")
    table.add_column("Upper", justify="right", style="magenta")
    table.add_column("Verdict")
    for row in record["rows"]:
        verdict = "[green]ok[/green]" if row["ok"] else f"[red]{'; '.join(row.get('problems') or []) or row.get('reason') or row.get('error')}[/red]"
        table.add_row(
            row["instance"],
            row.get("mode", ""),
            str(row.get("t", "")),
            str(row.get("expected", "")),
            str(row.get("best_lower") if row.get("best_lower") is not None else "-"),
            str(row.get("best_upper") if row.get("best_upper") is not None else "-"),
            verdict,
        )
    console.print(table)
    _status(record["failed"] == 0, f"{record['passed']} passed, {record['failed']} failed")


def show_export_dot(record):
    if record["manifest"]["outputs"]:
        _status(True, f"{record['edges']} labeled edges -> {record['manifest']['outputs'][0]}")
    else:
        console.out(record["text"], end="", highlight=False)


def show_node_totals(searches, nodes, seconds):
    err_console.print(Panel(
        f"[bold]Searches:[/bold] {searches:,}\n"
        f"[bold]Nodes explored:[/bold] {nodes:,}\n"
        f"[bold]Search time:[/bold] {seconds:.2f}s",
        title="🎯 Session Search Totals",
        border_style="blue"
    ))


RENDERERS = {
    "gen": show_gen,
    "construct": show_construct,
    "verify": show_verify,
    "search": show_search,
    "bounds": show_bounds,
    "matrix": show_matrix,
    "export_dot": show_export_dot,
}
