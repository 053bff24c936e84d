"""Command-line front end.

Subcommands cover root-system and Weyl-group inspection, deformed products
and full multiplication tables, movability and inequality checks, eigencone
inequality systems with redundancy pruning, and verification against the
bundled golden tables.

Every run echoes a normalized job description into its output header so the
result is reproducible from the header alone.  Output formats are markdown
(default), csv, and json; rationals appear as "p/q" strings in json.  Exit
codes: 0 success, 2 invalid arguments or input data, 3 enumeration budget
exceeded, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from .deform import DeformedClass, DeformedRing, DimensionError, deformed_ring
from .eigencone import MODES, Inequality, InequalitySystem, generate_system, prune_redundant
from .golden import GOLDEN_NAMES, GoldenTable, verify_table
from .horn import HornReport, check_character, check_dimension, check_refined, converse_search
from .invsets import crosscheck_gb
from .rootsystem import root_system
from .schubert import SchubertBasis, default_cache_dir, schubert_basis
from .weyl import BudgetError, Parabolic, WeylElement, WeylGroup, parabolic, weyl_group

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4

JSON_SCHEMA_VERSION = 1


# -- job description ------------------------------------------------------

@dataclass
class JobSpec:
    """Everything needed to reproduce one run; echoed into every output."""

    command: str
    family: str | None = None
    rank: int | None = None
    levi: tuple[int, ...] | None = None  # 0-based simple indices
    maximal: int | None = None           # 0-based omitted index
    s: int | None = None
    mode: str | None = None
    fmt: str = "md"
    cache_dir: str | None = None
    no_cache: bool = False
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def summary(self) -> str:
        bits = [f"command={self.command}"]
        if self.family is not None:
            bits.append(f"type={self.family}")
        if self.rank is not None:
            bits.append(f"rank={self.rank}")
        if self.levi is not None:
            bits.append("levi=" + (",".join(str(i + 1) for i in self.levi) or "-"))
        if self.maximal is not None:
            bits.append(f"parabolic={self.maximal + 1}")
        if self.s is not None:
            bits.append(f"s={self.s}")
        if self.mode is not None:
            bits.append(f"mode={self.mode}")
        for k, v in self.extra.items():
            bits.append(f"{k}={v}")
        bits.append(f"format={self.fmt}")
        if self.cache_dir:
            bits.append(f"cache-dir={self.cache_dir}")
        if self.no_cache:
            bits.append("no-cache")
        if self.jobs != 1:
            bits.append(f"jobs={self.jobs}")
        return " ".join(bits)

    def as_dict(self) -> dict:
        out: dict = {"command": self.command}
        if self.family is not None:
            out["type"] = self.family
        if self.rank is not None:
            out["rank"] = self.rank
        if self.levi is not None:
            out["levi"] = [i + 1 for i in self.levi]
        if self.maximal is not None:
            out["parabolic"] = self.maximal + 1
        if self.s is not None:
            out["s"] = self.s
        if self.mode is not None:
            out["mode"] = self.mode
        out.update(self.extra)
        out["format"] = self.fmt
        if self.cache_dir:
            out["cache_dir"] = self.cache_dir
        if self.no_cache:
            out["no_cache"] = True
        if self.jobs != 1:
            out["jobs"] = self.jobs
        return out


# -- formatting -----------------------------------------------------------

@dataclass
class Table:
    title: str
    columns: list[str]
    rows: list[list]


def rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _jsonable(x):
    """Recursively convert to JSON-safe values; exact rationals as strings."""
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (Path, WeylElement)):
        return str(x)
    return x


def _cell(x) -> str:
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _write_markdown(out: TextIO, table: Table) -> None:
    rows = [[_cell(x) for x in r] for r in table.rows]
    widths = [len(c) for c in table.columns]
    for r in rows:
        for k, x in enumerate(r):
            widths[k] = max(widths[k], len(x))
    def line(cells):
        out.write("| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |\n")
    line(table.columns)
    line(["-" * w for w in widths])
    for r in rows:
        line(r)


def emit(spec: JobSpec, tables: list[Table], payload: dict, out: TextIO) -> None:
    if spec.fmt == "json":
        doc = {"schema_version": JSON_SCHEMA_VERSION, "job": spec.as_dict()}
        doc.update(payload)
        json.dump(_jsonable(doc), out, indent=2)
        out.write("\n")
        return
    out.write(f"# {spec.summary()}\n")
    if spec.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        for t in tables:
            out.write(f"# {t.title}\n")
            writer.writerow(t.columns)
            for r in t.rows:
                writer.writerow([_cell(x) for x in r])
        return
    for t in tables:
        out.write(f"\n## {t.title}\n\n")
        _write_markdown(out, t)


# -- shared argument plumbing ---------------------------------------------

def _parse_index_list(text: str, rank: int, what: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        idx = tuple(int(tok) - 1 for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad {what} {text!r}: expected comma-separated integers")
    if any(i < 0 or i >= rank for i in idx):
        raise ValueError(f"{what} {text!r} has entries outside 1..{rank}")
    return idx


def parse_words(text: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Semicolon-separated reduced words in 1-based simple indices.

    An empty segment or "e" denotes the identity, e.g. "1,2;e;2,3,2".
    """
    words = []
    for seg in text.split(";"):
        seg = seg.strip()
        if seg in ("", "e", "-"):
            words.append(())
            continue
        words.append(_parse_index_list(seg, rank, "word"))
    return tuple(words)


def word_str(word: Sequence[int]) -> str:
    return ",".join(str(i + 1) for i in word) or "e"


_touched_bases: list[SchubertBasis] = []


def _basis_for(spec: JobSpec, group: WeylGroup) -> SchubertBasis:
    cache = Path(spec.cache_dir) if spec.cache_dir else default_cache_dir(spec.no_cache)
    basis = schubert_basis(group, cache_dir=cache)
    if basis not in _touched_bases:
        _touched_bases.append(basis)
    return basis


def _flush_caches() -> None:
    while _touched_bases:
        _touched_bases.pop().save_cache()


def _group_for(spec: JobSpec) -> WeylGroup:
    rs = root_system(spec.family, spec.rank)
    group = weyl_group(rs)
    _basis_for(spec, group)
    return group


def _parabolic_for(spec: JobSpec, group: WeylGroup) -> Parabolic:
    rank = group.rs.rank
    if spec.levi is not None:
        return parabolic(group, spec.levi)
    if spec.maximal is not None:
        if not 0 <= spec.maximal < rank:
            raise ValueError(f"parabolic index {spec.maximal + 1} outside 1..{rank}")
        return parabolic(group, [k for k in range(rank) if k != spec.maximal])
    return parabolic(group, [])


def _elements(parab: Parabolic, words: Sequence[Sequence[int]]) -> list[WeylElement]:
    out = []
    for word in words:
        w = parab.group.from_word(word)
        if w.length != len(word):
            raise ValueError(f"word {word_str(word)} is not reduced")
        if not parab.contains(w):
            rep = parab.minimal_rep(w)
            raise ValueError(
                f"word {word_str(word)} is not a minimal coset representative"
                f" (its coset is represented by {word_str(rep.word)})")
        out.append(w)
    return out


def render_class(c: DeformedClass) -> str:
    """Human-readable expansion, classes in codimension order."""
    ring = c.ring
    order = {pos: k for k, pos in enumerate(ring.table_order())}
    bits = []
    for pos in sorted(c.coeffs, key=order.__getitem__):
        for exps, coeff in sorted(c.coeffs[pos].items()):
            mono = "".join(f"t{ring.omitted[k] + 1}" + (f"^{e}" if e > 1 else "")
                           for k, e in enumerate(exps) if e)
            head = "" if coeff == 1 else f"{coeff}*"
            body = (mono + "*" if mono else "") + ring.labels[pos]
            bits.append(head + body)
    return " + ".join(bits) if bits else "0"


# -- subcommands ----------------------------------------------------------

def cmd_roots(spec: JobSpec, out: TextIO) -> int:
    rs = root_system(spec.family, spec.rank)
    n = rs.rank
    summary = Table("summary", ["key", "value"], [
        ["type", rs.label],
        ["rank", n],
        ["positive roots", rs.num_positive_roots],
        ["Weyl order", rs.weyl_order()],
        ["highest root", " ".join(map(str, rs.highest_root()))],
    ])
    cartan = Table("cartan matrix", ["row"] + [f"a{j + 1}" for j in range(n)],
                   [[f"a{i + 1}"] + list(rs.cartan[i]) for i in range(n)])
    roots = Table("positive roots", ["#", "coordinates", "height", "length^2"],
                  [[k + 1, " ".join(map(str, r)), sum(r), rational(rs.form(r, r))]
                   for k, r in enumerate(rs.positive_roots)])
    fw = Table("fundamental weights (root coordinates)",
               ["i", "coordinates"],
               [[i + 1, " ".join(rational(x) for x in rs.fundamental_weight(i).coords)]
                for i in range(n)])
    payload = {
        "type": rs.label,
        "rank": n,
        "cartan": [list(r) for r in rs.cartan],
        "weyl_order": rs.weyl_order(),
        "highest_root": list(rs.highest_root()),
        "positive_roots": [list(r) for r in rs.positive_roots],
        "fundamental_weights": [list(rs.fundamental_weight(i).coords) for i in range(n)],
    }
    emit(spec, [summary, cartan, roots, fw], payload, out)
    return EXIT_OK


def cmd_weyl(spec: JobSpec, out: TextIO) -> int:
    group = _group_for(spec)
    parab = _parabolic_for(spec, group)
    profile = parab.degree_profile()
    summary = Table("summary", ["key", "value"], [
        ["type", group.rs.label],
        ["Weyl order", group.order],
        ["Levi", ",".join(str(i + 1) for i in parab.levi) or "-"],
        ["representatives", len(parab.reps)],
        ["dimension", parab.dim],
        ["longest element", word_str(parab.w_o.word)],
        ["degree profile", " ".join(map(str, profile))],
    ])
    reps = Table("minimal representatives", ["#", "word", "length", "codim"],
                 [[k + 1, word_str(w.word), w.length, parab.codim(w)]
                  for k, w in enumerate(parab.reps)])
    payload = {
        "type": group.rs.label,
        "weyl_order": group.order,
        "levi": [i + 1 for i in parab.levi],
        "dimension": parab.dim,
        "degree_profile": list(profile),
        "representatives": [
            {"word": [i + 1 for i in w.word], "length": w.length, "codim": parab.codim(w)}
            for w in parab.reps
        ],
    }
    emit(spec, [summary, reps], payload, out)
    return EXIT_OK


def cmd_product(spec: JobSpec, words_arg: str, out: TextIO) -> int:
    group = _group_for(spec)
    parab = _parabolic_for(spec, group)
    ring = deformed_ring(parab)
    words = parse_words(words_arg, group.rs.rank)
    if len(words) < 2:
        raise ValueError("need at least two factors, e.g. --words '1,2;2,1'")
    ws = _elements(parab, words)
    acc = ring.basis_class(ws[0])
    for w in ws[1:]:
        acc = ring.multiply(acc, ring.basis_class(w))
    order = {pos: k for k, pos in enumerate(ring.table_order())}
    rows = []
    expansion = []
    for pos in sorted(acc.coeffs, key=order.__getitem__):
        w = ring.reps[pos]
        for exps, coeff in sorted(acc.coeffs[pos].items()):
            mono = "".join(f"t{ring.omitted[k] + 1}" + (f"^{e}" if e > 1 else "")
                           for k, e in enumerate(exps) if e) or "1"
            rows.append([ring.labels[pos], word_str(w.word), parab.codim(w), mono, coeff])
            expansion.append({
                "label": ring.labels[pos],
                "word": [i + 1 for i in w.word],
                "codim": parab.codim(w),
                "exponents": list(exps),
                "coefficient": coeff,
            })
    rendered = render_class(acc)
    factors = " * ".join(ring.labels[ring.position(w)] for w in ws)
    summary = Table("product", ["expression", "value"], [[factors, rendered]])
    terms = Table("terms", ["label", "word", "codim", "monomial", "coefficient"], rows)
    payload = {
        "factors": [{"word": [i + 1 for i in w.word],
                     "label": ring.labels[ring.position(w)]} for w in ws],
        "rendered": rendered,
        "terms": expansion,
    }
    emit(spec, [summary, terms], payload, out)
    return EXIT_OK


def cmd_deform_table(spec: JobSpec, out: TextIO) -> int:
    group = _group_for(spec)
    parab = _parabolic_for(spec, group)
    ring = deformed_ring(parab)
    order = [pos for pos in ring.table_order() if ring.reps[pos].length < parab.dim]
    labels = [ring.labels[pos] for pos in order]
    classes = Table("classes", ["label", "word", "codim"],
                    [[ring.labels[pos], word_str(ring.reps[pos].word),
                      parab.codim(ring.reps[pos])] for pos in order])
    grid_rows = []
    entries = []
    for pu in order:
        row = [ring.labels[pu]]
        for pv in order:
            val = render_class(ring.deformed_product(ring.reps[pu], ring.reps[pv]))
            row.append(val)
            if pu <= pv:
                entries.append({"left": ring.labels[pu], "right": ring.labels[pv],
                                "value": val})
        grid_rows.append(row)
    grid = Table("deformed multiplication table (unit class omitted)",
                 ["*"] + labels, grid_rows)
    payload = {
        "type": group.rs.label,
        "levi": [i + 1 for i in parab.levi],
        "classes": [{"label": ring.labels[pos],
                     "word": [i + 1 for i in ring.reps[pos].word],
                     "codim": parab.codim(ring.reps[pos])} for pos in order],
        "products": entries,
    }
    emit(spec, [classes, grid], payload, out)
    return EXIT_OK


def cmd_lmovable(spec: JobSpec, words_arg: str, out: TextIO) -> int:
    group = _group_for(spec)
    parab = _parabolic_for(spec, group)
    ring = deformed_ring(parab)
    ws = _elements(parab, parse_words(words_arg, group.rs.rank))
    cert = ring.is_levi_movable(ws)
    verdict = Table("verdict", ["key", "value"], [
        ["words", "; ".join(word_str(w.word) for w in ws)],
        ["codimension sum", parab.dim],
        ["point coefficient", cert.coefficient],
        ["movable", cert.movable],
    ])
    gaps = Table("character gaps", ["coweight", "gap"],
                 [[i + 1, g] for i, g in sorted(cert.character_gap.items())])
    payload = {
        "words": [[i + 1 for i in w.word] for w in ws],
        "coefficient": cert.coefficient,
        "character_gap": {str(i + 1): g for i, g in sorted(cert.character_gap.items())},
        "movable": cert.movable,
    }
    emit(spec, [verdict, gaps], payload, out)
    return EXIT_OK


def _report_tables(reports: list[tuple[str, HornReport]]) -> list[Table]:
    rows = []
    for fam, rep in reports:
        if not rep.applicable:
            rows.append([fam, "-", "-", "-", "-", "n/a", rep.reason])
            continue
        for c in rep.checks:
            note = " ".join(f"{k}={v}" for k, v in sorted(c.as_dict().get("data", {}).items())
                            if not isinstance(v, (list, dict)))
            rows.append([fam, c.kind, c.lhs, c.relation, c.rhs, c.passed, note])
    return [Table("checks", ["family", "kind", "lhs", "rel", "rhs", "ok", "context"], rows)]


def cmd_horn_check(spec: JobSpec, args, out: TextIO) -> int:
    group = _group_for(spec)
    parab = _parabolic_for(spec, group)
    ring = deformed_ring(parab)
    ws = _elements(parab, parse_words(args.words, group.rs.rank))
    which = args.check
    reports: list[tuple[str, HornReport]] = []
    if which in ("all", "character"):
        reports.append(("character", check_character(ring, ws)))
    if which in ("all", "refined"):
        reports.append(("refined", check_refined(ring, ws)))
    wants_dimension = args.inner_levi is not None or args.outer_levi is not None
    if which == "dimension" or (which == "all" and wants_dimension):
        if args.inner_levi is None or args.outer_levi is None:
            raise ValueError("dimension checks need --inner-levi and --outer-levi")
        inner = _parse_index_list(args.inner_levi, group.rs.rank, "inner Levi")
        outer = _parse_index_list(args.outer_levi, group.rs.rank, "outer Levi")
        utuple = parse_words(args.levi_words, group.rs.rank) if args.levi_words else \
            tuple(() for _ in ws)
        reports.append(("dimension", check_dimension(ring, ws, inner, outer, utuple)))
    failures = sum(len(rep.failures()) for _, rep in reports)
    payload = {
        "reports": {fam: rep.as_dict() for fam, rep in reports},
        "failures": failures,
    }
    tables = _report_tables(reports)
    tables.append(Table("result", ["key", "value"], [
        ["families run", ", ".join(fam for fam, _ in reports)],
        ["failed checks", failures],
    ]))
    emit(spec, tables, payload, out)
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def _system_tables(system: InequalitySystem) -> list[Table]:
    per: dict[int, list[int]] = {}
    for k, q in enumerate(system.inequalities):
        per.setdefault(q.omitted, []).append(k)
    rows = []
    for i in sorted(per):
        ks = per[i]
        row = [i + 1, len(ks)]
        if system.redundant is not None:
            red = sum(1 for k in ks if system.redundant[k])
            row += [red, len(ks) - red]
        rows.append(row)
    total = ["total", len(system.inequalities)]
    cols = ["parabolic", "inequalities"]
    if system.redundant is not None:
        nred = sum(system.redundant)
        total += [nred, len(system.inequalities) - nred]
        cols += ["redundant", "essential"]
    rows.append(total)
    return [Table(f"inequality system {system.label}", cols, rows)]


def cmd_eigencone(spec: JobSpec, args, out: TextIO) -> int:
    group = _group_for(spec)
    system = generate_system(group, spec.s, spec.mode)
    if args.prune:
        system = prune_redundant(system)
    payload = system.as_dict()
    if args.output:
        doc = {"schema_version": JSON_SCHEMA_VERSION, "job": spec.as_dict()}
        doc.update(payload)
        Path(args.output).write_text(json.dumps(_jsonable(doc), indent=2) + "\n")
    emit(spec, _system_tables(system), payload, out)
    return EXIT_OK


def _load_system(path: str) -> InequalitySystem:
    doc = json.loads(Path(path).read_text())
    try:
        label = doc["system"]
        s = int(doc["s"])
        mode = doc["mode"]
        raw = doc["inequalities"]
    except KeyError as e:
        raise ValueError(f"input file is missing field {e}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    rs = root_system(label[0], int(label[1:]))
    inequalities = []
    for q in raw:
        inequalities.append(Inequality(
            omitted=int(q["parabolic"]) - 1,
            words=tuple(tuple(i - 1 for i in w) for w in q["words"]),
            functional=tuple(tuple(int(x) for x in b) for b in q["functional"]),
        ))
    return InequalitySystem(rs, s, mode, inequalities)


def cmd_redundancy(spec: JobSpec, args, out: TextIO) -> int:
    if args.input:
        system = _load_system(args.input)
    else:
        if spec.family is None or spec.rank is None:
            raise ValueError("need either --input FILE or --type/--rank")
        group = _group_for(spec)
        system = generate_system(group, spec.s, spec.mode)
    system = prune_redundant(system)
    tables = _system_tables(system)
    redundant_ids = [k + 1 for k, r in enumerate(system.redundant) if r]
    tables.append(Table("redundant inequalities", ["#", "parabolic", "words"],
                        [[k, system.inequalities[k - 1].omitted + 1,
                          "; ".join(word_str(w) for w in system.inequalities[k - 1].words)]
                         for k in redundant_ids]))
    payload = system.as_dict()
    payload["redundant_ids"] = redundant_ids
    if args.output:
        doc = {"schema_version": JSON_SCHEMA_VERSION, "job": spec.as_dict()}
        doc.update(payload)
        Path(args.output).write_text(json.dumps(_jsonable(doc), indent=2) + "\n")
    emit(spec, tables, payload, out)
    return EXIT_OK


def cmd_leviprod_check(spec: JobSpec, out: TextIO) -> int:
    group = _group_for(spec)
    ring = deformed_ring(parabolic(group, []))
    report = crosscheck_gb(ring)
    rows = [["type", report.label], ["pairs", report.pairs],
            ["mismatches", len(report.mismatches)], ["passed", report.passed]]
    tables = [Table("degenerate product vs inversion-set rule", ["key", "value"], rows)]
    if report.mismatches:
        tables.append(Table("first mismatches", ["u", "v", "computed", "expected"],
                            [[word_str(u), word_str(v), str(lt), str(rt)]
                             for u, v, lt, rt in report.mismatches[:5]]))
    payload = {
        "type": report.label,
        "pairs": report.pairs,
        "mismatches": len(report.mismatches),
        "passed": report.passed,
    }
    emit(spec, tables, payload, out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_verify_golden(spec: JobSpec, args, out: TextIO) -> int:
    names = [args.table] if args.table else list(GOLDEN_NAMES)
    for name in names:
        fam, rank = name[0].upper(), int(name[1])
        _basis_for(spec, weyl_group(root_system(fam, rank)))
    results = [verify_table(GoldenTable.load(name)) for name in names]
    rows = []
    for r in results:
        note = r.detail if not r.matched else \
            "; ".join(f"{a}={b}" for a, b in sorted(r.bijection.items()))
        rows.append([r.name, r.matched, note])
    table = Table("golden table verification", ["table", "ok", "bijection / detail"], rows)
    payload = {"results": [
        {"table": r.name, "matched": r.matched,
         "bijection": dict(sorted(r.bijection.items())), "detail": r.detail}
        for r in results]}
    emit(spec, [table], payload, out)
    return EXIT_OK if all(r.matched for r in results) else EXIT_MISMATCH


def cmd_horn_converse(spec: JobSpec, args, out: TextIO) -> int:
    group = _group_for(spec)
    parab = _parabolic_for(spec, group)
    ring = deformed_ring(parab)
    found = converse_search(ring, s=spec.s, limit=args.limit or None)
    rows = [[k + 1, "; ".join(word_str(w) for w in rep.words)]
            for k, rep in enumerate(found)]
    tables = [
        Table("summary", ["key", "value"], [
            ["system", ring.rs.label],
            ["levi", ",".join(str(i + 1) for i in parab.levi) or "-"],
            ["candidates", len(found)],
        ]),
        Table("zero-product tuples passing every character inequality",
              ["#", "words"], rows),
    ]
    payload = {
        "system": ring.rs.label,
        "levi": [i + 1 for i in parab.levi],
        "candidates": [rep.as_dict() for rep in found],
    }
    emit(spec, tables, payload, out)
    return EXIT_OK


# -- argument parser ------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, parab: bool = True,
                required_type: bool = True) -> None:
    p.add_argument("--type", choices=list("ABCDEFG"), required=required_type,
                   help="Cartan family")
    p.add_argument("--rank", type=int, required=required_type)
    if parab:
        p.add_argument("--levi",
                       help="1-based simple indices of the Levi, e.g. '1,3' ('-' for Borel)")
        p.add_argument("--parabolic", type=int,
                       help="maximal parabolic by its omitted 1-based simple index")
    p.add_argument("--format", dest="fmt", choices=("md", "csv", "json"), default="md")
    p.add_argument("--cache-dir", help="directory for the structure-constant cache")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--jobs", type=int, default=1,
                   help="accepted for compatibility; evaluation is serial")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="schubdeform",
        description="Exact Schubert calculus with the deformed product.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root system data")
    _add_common(p, parab=False)

    p = sub.add_parser("weyl", help="Weyl group and coset representatives")
    _add_common(p)

    p = sub.add_parser("product", help="deformed product of listed classes")
    _add_common(p)
    p.add_argument("--words", required=True,
                   help="semicolon-separated reduced words, 1-based, e.g. '1,2;2,1'")

    p = sub.add_parser("deform-table", help="full deformed multiplication table")
    _add_common(p)

    p = sub.add_parser("lmovable", help="Levi-movability certificate for a tuple")
    _add_common(p)
    p.add_argument("--words", required=True)

    p = sub.add_parser("horn-check", help="necessary inequalities for one tuple")
    _add_common(p)
    p.add_argument("--words", required=True)
    p.add_argument("--check", choices=("all", "character", "refined", "dimension"),
                   default="all")
    p.add_argument("--inner-levi", help="1-based indices of the smaller Levi")
    p.add_argument("--outer-levi", help="1-based indices of the larger Levi")
    p.add_argument("--levi-words",
                   help="words of the Levi tuple in ambient 1-based indices")

    p = sub.add_parser("eigencone", help="generate an inequality system")
    _add_common(p, parab=False)
    p.add_argument("--s", type=int, default=3, help="number of factors")
    p.add_argument("--mode", choices=MODES, default="classical")
    p.add_argument("--prune", action="store_true", help="mark redundant inequalities")
    p.add_argument("--output", help="also write the full system as JSON to this file")

    p = sub.add_parser("redundancy", help="prune a saved or freshly generated system")
    p.add_argument("--input", help="JSON file produced by the eigencone command")
    _add_common(p, parab=False, required_type=False)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--mode", choices=MODES, default="classical")
    p.add_argument("--output", help="write the pruned system as JSON to this file")

    p = sub.add_parser("leviprod-check",
                       help="degenerate product vs inversion-set rule on the full flag variety")
    _add_common(p, parab=False)

    p = sub.add_parser("verify-golden", help="check bundled multiplication tables")
    p.add_argument("--table", choices=GOLDEN_NAMES, help="single table (default: all)")
    p.add_argument("--format", dest="fmt", choices=("md", "csv", "json"), default="md")
    p.add_argument("--cache-dir")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("horn-converse-experiment",
                       help="search for zero-product tuples passing the character checks")
    _add_common(p)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--limit", type=int, default=10,
                   help="stop after this many candidates (0 = unlimited)")
    return top


def _spec_from_args(args) -> JobSpec:
    spec = JobSpec(command=args.command, fmt=getattr(args, "fmt", "md"))
    spec.family = getattr(args, "type", None)
    spec.rank = getattr(args, "rank", None)
    if getattr(args, "levi", None) is not None:
        if spec.rank is None:
            raise ValueError("--levi needs --rank")
        spec.levi = _parse_index_list(args.levi, spec.rank, "levi")
    elif getattr(args, "parabolic", None) is not None:
        spec.maximal = args.parabolic - 1
    if getattr(args, "s", None) is not None:
        spec.s = args.s
    if getattr(args, "mode", None) is not None:
        spec.mode = args.mode
    for name in ("words", "check", "inner_levi", "outer_levi", "levi_words",
                 "table", "limit", "prune", "input", "output"):
        val = getattr(args, name, None)
        if val is not None and val is not False:
            spec.extra[name.replace("_", "-")] = val
    spec.cache_dir = getattr(args, "cache_dir", None)
    spec.no_cache = getattr(args, "no_cache", False)
    spec.jobs = getattr(args, "jobs", 1)
    if spec.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    return spec


def _dispatch(spec: JobSpec, args, out: TextIO) -> int:
    if spec.command == "roots":
        return cmd_roots(spec, out)
    if spec.command == "weyl":
        return cmd_weyl(spec, out)
    if spec.command == "product":
        return cmd_product(spec, args.words, out)
    if spec.command == "deform-table":
        return cmd_deform_table(spec, out)
    if spec.command == "lmovable":
        return cmd_lmovable(spec, args.words, out)
    if spec.command == "horn-check":
        return cmd_horn_check(spec, args, out)
    if spec.command == "eigencone":
        return cmd_eigencone(spec, args, out)
    if spec.command == "redundancy":
        return cmd_redundancy(spec, args, out)
    if spec.command == "leviprod-check":
        return cmd_leviprod_check(spec, out)
    if spec.command == "verify-golden":
        return cmd_verify_golden(spec, args, out)
    if spec.command == "horn-converse-experiment":
        return cmd_horn_converse(spec, args, out)
    raise ValueError(f"unknown command {spec.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = _spec_from_args(args)
        code = _dispatch(spec, args, sys.stdout)
    except BudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        _flush_caches()
    return code


if __name__ == "__main__":
    raise SystemExit(main())
