"""Command-line interface: censuses, invariants, orbits and property suites.

Output is deterministic: repeated invocations print identical bytes, and
the ``json`` format round-trips losslessly through ``OutputRecord``.
Exit codes: 0 success, 1 genuine property failure, 2 bad arguments or
illegal structure values, 3 documented size limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .census import (
    THEORY_PIN_MINUS,
    THEORY_SPIN,
    pin_census_closed_form,
    pin_census_enumerated,
    pin_census_recursive,
)
from .enhancements import Enhancement, brown_gauss, enumerate_enhancements, value_histogram
from .orbits import (
    MAX_BRUTE_DIM,
    MAX_GENERATED_DIM,
    isometry_generators,
    isometry_group,
    orbit_partition,
)
from .refinements import Refinement, arf_symplectic, enumerate_refinements, spin_census
from .surfaces import LimitError, MAX_TABLE_DIM, Surface, nonorientable_surface, orientable_surface
from .verify import FAIL, run_suites, summarize

Cell = "int | str | None"


@dataclass(frozen=True)
class OutputRecord:
    """One command's complete output: metadata, one table, summary lines."""

    command: str
    meta: tuple[tuple[str, "int | str"], ...]
    columns: tuple[str, ...]
    rows: tuple[tuple["int | str | None", ...], ...]
    summary: tuple[tuple[str, "int | str"], ...] = ()

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "meta": dict(self.meta),
            "columns": list(self.columns),
            "rows": [list(row) for row in self.rows],
            "summary": dict(self.summary),
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        payload = json.loads(text)
        return cls(
            command=payload["command"],
            meta=tuple(payload["meta"].items()),
            columns=tuple(payload["columns"]),
            rows=tuple(tuple(row) for row in payload["rows"]),
            summary=tuple(payload["summary"].items()),
        )


def _cell_text(cell) -> str:
    return "-" if cell is None else str(cell)


def render_table(record: OutputRecord) -> str:
    lines = [f"command: {record.command}"]
    lines += [f"{key}: {value}" for key, value in record.meta]
    if record.columns:
        lines.append("")
        table = [record.columns] + [tuple(_cell_text(c) for c in row) for row in record.rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(record.columns))]
        for row in table:
            lines.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())
    if record.summary:
        lines.append("")
        lines += [f"{key}: {value}" for key, value in record.summary]
    return "\n".join(lines) + "\n"


def render_csv(record: OutputRecord) -> str:
    buf = io.StringIO()
    buf.write(f"# command: {record.command}\n")
    for key, value in record.meta:
        buf.write(f"# {key}: {value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(record.columns)
    for row in record.rows:
        writer.writerow(["" if c is None else c for c in row])
    for key, value in record.summary:
        buf.write(f"# {key}: {value}\n")
    return buf.getvalue()


RENDERERS = {
    "table": render_table,
    "csv": render_csv,
    "json": lambda record: record.to_json(),
}


def parse_surface(spec: str) -> Surface:
    """Parse the surface grammar: S:<g> orientable, N:<k> nonorientable."""
    kind, sep, genus = spec.partition(":")
    if sep != ":" or kind not in ("S", "N") or not genus.isdigit():
        raise ValueError(f"bad surface spec {spec!r}; expected S:<genus> or N:<genus>")
    if kind == "S":
        return orientable_surface(int(genus))
    return nonorientable_surface(int(genus))


def parse_values(text: str) -> tuple[int, ...]:
    if text == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad value list {text!r}; expected comma-separated integers") from None


def cmd_census(args) -> tuple[OutputRecord, int]:
    surface = parse_surface(args.surface)
    limit = args.enum_limit
    if surface.form.dim > limit:
        raise LimitError(
            f"census enumeration capped at dimension {limit}, got {surface.form.dim}"
        )
    if args.theory == THEORY_SPIN:
        if surface.kind != "orientable":
            raise ValueError("spin structures need an orientable surface")
        census = spin_census(surface.genus)
    else:
        census = pin_census_enumerated(surface, limit=limit)

    meta = (
        ("surface", surface.label),
        ("theory", args.theory),
        ("structures", sum(census.values())),
    )
    if not args.compare:
        columns = ("invariant", "count")
        rows = tuple((i, census[i]) for i in sorted(census))
        return OutputRecord("census", meta, columns, rows), 0

    if args.theory == THEORY_SPIN:
        g = surface.genus
        closed = {
            0: ((1 << (2 * g)) + (1 << g)) // 2,
            1: ((1 << (2 * g)) - (1 << g)) // 2,
        }
        columns = ("invariant", "enumerated", "closed_form", "flag")
        rows = tuple(
            (i, census.get(i, 0), closed[i], "CONFIRMED" if census.get(i, 0) == closed[i] else "DISPUTED")
            for i in sorted(closed)
        )
        return OutputRecord("census", meta, columns, rows), 0

    entries = {e.invariant: e for e in pin_census_closed_form(surface, limit=limit)}
    recursion = pin_census_recursive(surface.genus) if surface.kind == "nonorientable" else None
    columns = (
        "invariant",
        "enumerated",
        "closed_form",
        "closed_form_flag",
        "recursion",
        "corrected",
        "corrected_flag",
    )
    invariants = sorted(set(census) | set(entries) | set(recursion or ()))
    rows = []
    for i in invariants:
        entry = entries.get(i)
        rows.append(
            (
                i,
                census.get(i, 0),
                entry.formula_count if entry else None,
                entry.flag if entry else None,
                recursion.get(i, 0) if recursion is not None else None,
                entry.corrected_count if entry else None,
                entry.corrected_flag if entry else None,
            )
        )
    return OutputRecord("census", meta, columns, tuple(rows)), 0


def cmd_invariant(args) -> tuple[OutputRecord, int]:
    surface = parse_surface(args.surface)
    values = parse_values(args.refinement if args.refinement is not None else args.enhancement)
    if args.refinement is not None:
        theory = THEORY_SPIN
        if surface.kind != "orientable":
            raise ValueError("refinement values need an orientable surface")
        structure = Refinement(surface.form, values)
        rows = (("arf", arf_symplectic(structure)),)
    else:
        theory = THEORY_PIN_MINUS
        structure = Enhancement(surface.form, values)
        hist = value_histogram(structure)
        rows = (
            ("beta", brown_gauss(structure)),
            ("histogram", ",".join(str(c) for c in hist)),
        )
    if args.theory is not None and args.theory != theory:
        raise ValueError(f"theory {args.theory} does not match the given structure values")
    meta = (
        ("surface", surface.label),
        ("theory", theory),
        ("values", ",".join(str(v) for v in values)),
    )
    return OutputRecord("invariant", meta, ("name", "value"), rows), 0


def cmd_orbits(args) -> tuple[OutputRecord, int]:
    surface = parse_surface(args.surface)
    form = surface.form
    if args.theory == THEORY_SPIN:
        if surface.kind != "orientable":
            raise ValueError("spin structures need an orientable surface")
        structures = enumerate_refinements(form)
        invariant_name, invariant = "arf", arf_symplectic
    else:
        structures = enumerate_enhancements(form)
        invariant_name, invariant = "beta", brown_gauss

    if form.dim <= args.brute_limit:
        generators = isometry_group(form, "brute")
        group_desc = f"brute (order {len(generators)})"
    elif form.dim <= args.gen_limit:
        generators = isometry_generators(form)
        group_desc = f"generated ({len(generators)} generators)"
    else:
        raise LimitError(
            f"orbit computation capped at dimension {args.gen_limit}, got {form.dim}"
        )

    orbits = orbit_partition(form, structures, generators=generators)
    level_sets: dict[int, set] = {}
    for s in structures:
        level_sets.setdefault(invariant(s), set()).add(s)
    match = {frozenset(o) for o in orbits} == {frozenset(v) for v in level_sets.values()}

    rows = tuple(
        (index + 1, len(orbit), invariant(orbit[0]))
        for index, orbit in enumerate(orbits)
    )
    meta = (
        ("surface", surface.label),
        ("theory", args.theory),
        ("group", group_desc),
        ("invariant", invariant_name),
    )
    summary = (
        ("orbits", len(orbits)),
        ("level-sets", "PASS" if match else "FAIL"),
    )
    record = OutputRecord("orbits", meta, ("orbit", "size", "invariant"), rows, summary)
    return record, 0 if match else 1


def cmd_verify(args) -> tuple[OutputRecord, int]:
    results = run_suites(args.suites)
    summary_map = summarize(results)
    rows = tuple((r.suite, r.name, r.status, r.detail) for r in results)
    meta = (("suites", " ".join(args.suites)),)
    summary = tuple((k, v) for k, v in summary_map.items())
    failed = sum(1 for r in results if r.status == FAIL)
    record = OutputRecord("verify", meta, ("suite", "check", "status", "detail"), rows, summary)
    return record, 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinforms",
        description="Quadratic-form calculus for spin and pin structures on closed surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")
        p.add_argument("--out", type=Path, default=None, help="also write the output to this file")

    p_census = sub.add_parser("census", help="count structures by invariant value")
    p_census.add_argument("-s", "--surface", required=True, help="surface spec, e.g. S:2 or N:3")
    p_census.add_argument("-t", "--theory", choices=(THEORY_SPIN, THEORY_PIN_MINUS), required=True)
    p_census.add_argument("--compare", action="store_true", help="add closed-form and recursion columns")
    p_census.add_argument("--enum-limit", type=int, default=MAX_TABLE_DIM)
    add_common(p_census)
    p_census.set_defaults(handler=cmd_census)

    p_inv = sub.add_parser("invariant", help="invariant of one structure given by basis values")
    p_inv.add_argument("-s", "--surface", required=True)
    group = p_inv.add_mutually_exclusive_group(required=True)
    group.add_argument("-q", "--refinement", help="comma-separated Z/2 basis values")
    group.add_argument("-e", "--enhancement", help="comma-separated Z/4 basis values")
    p_inv.add_argument("-t", "--theory", choices=(THEORY_SPIN, THEORY_PIN_MINUS), default=None)
    add_common(p_inv)
    p_inv.set_defaults(handler=cmd_invariant)

    p_orb = sub.add_parser("orbits", help="isometry orbits of structures and invariant level sets")
    p_orb.add_argument("-s", "--surface", required=True)
    p_orb.add_argument("-t", "--theory", choices=(THEORY_SPIN, THEORY_PIN_MINUS), required=True)
    p_orb.add_argument("--brute-limit", type=int, default=MAX_BRUTE_DIM)
    p_orb.add_argument("--gen-limit", type=int, default=MAX_GENERATED_DIM)
    add_common(p_orb)
    p_orb.set_defaults(handler=cmd_orbits)

    p_ver = sub.add_parser("verify", help="run named property suites")
    p_ver.add_argument("suites", nargs="*", default=["all"])
    add_common(p_ver)
    p_ver.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, code = args.handler(args)
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = RENDERERS[args.format](record)
    sys.stdout.write(text)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
