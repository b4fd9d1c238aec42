"""Command-line front end. Every report is key = value lines, exact rationals only."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import check_arithmetic_properties, format_algebra, parse_algebra, validate_bl
from .errors import AlgebraError, ParseError
from .filters import KINDS, FilterKind, enumerate_filters, render_subset
from .fuzzy import parse_fuzzy_set
from .taxonomy import classify, thresholds, threshold_profile
from .verify import (
    GridSpec,
    audit_examples,
    default_corpus,
    generate_bl_algebras,
    verify_equivalences,
    verify_implicative_decomposition,
)

OK, CHECK_FAILED, USAGE = 0, 1, 2

THEOREM_GROUPS = ("arithmetic", "equivalences", "decomposition")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        # --help lands here; surface the text as a usage result
        raise UsageError(message or self.format_help())


def _bool(b):
    return "true" if b else "false"


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_algebra(path):
    alg = parse_algebra(_read(path))
    return alg


def _require_valid(alg, out):
    report = validate_bl(alg)
    if not report.valid:
        out.append("bl_valid = false")
        for axiom, w in report.violations:
            out.append(f"violation.{axiom} = ({','.join(w)})")
        return False
    return True


def cmd_validate(args, out):
    alg = _load_algebra(args.algebra)
    out.append(f"algebra = {alg.name}")
    out.append(f"size = {alg.n}")
    report = validate_bl(alg)
    out.append(f"bl_valid = {_bool(report.valid)}")
    for axiom, w in report.violations:
        out.append(f"violation.{axiom} = ({','.join(w)})")
    if not report.valid:
        return CHECK_FAILED, f"{alg.name} is not a BL-algebra."
    props = check_arithmetic_properties(alg)
    for name, w in props.results:
        out.append(f"property.{name} = {'pass' if w is None else 'fail'}")
        if w is not None:
            out.append(f"property.{name}.witness = ({','.join(w)})")
    chain = all(alg.le[x][y] or alg.le[y][x] for x in range(alg.n) for y in range(alg.n))
    out.append(f"chain = {_bool(chain)}")
    summary = (
        f"{alg.name} is a {'linearly ordered ' if chain else ''}BL-algebra on {alg.n} "
        f"elements; all arithmetic laws {'hold' if props.passed else 'do not hold'}."
    )
    return (OK if props.passed else CHECK_FAILED), summary


def cmd_filters(args, out):
    alg = _load_algebra(args.algebra)
    out.append(f"algebra = {alg.name}")
    if not _require_valid(alg, out):
        return CHECK_FAILED, f"{alg.name} is not a BL-algebra."
    kind = FilterKind.parse(args.kind)
    found = enumerate_filters(alg, kind)
    out.append(f"filters.kind = {kind.value}")
    out.append(f"filters.count = {len(found)}")
    for i, s in enumerate(found, start=1):
        out.append(f"filters.{i} = {render_subset(alg, s)}")
    return OK, f"{alg.name} has {len(found)} {kind.value.replace('_', ' ')} filter(s)."


def _load_pair(args, out):
    alg = _load_algebra(args.algebra)
    F = parse_fuzzy_set(_read(args.fuzzyset), alg)
    out.append(f"algebra = {alg.name}")
    out.append(f"fuzzyset = {F.name}")
    if not _require_valid(alg, out):
        return alg, None
    return alg, F


def cmd_classify(args, out):
    alg, F = _load_pair(args, out)
    if F is None:
        return CHECK_FAILED, f"{alg.name} is not a BL-algebra."
    extra = []
    for a, b in args.thresholds or ():
        try:
            extra.append(thresholds(a, b))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    record = classify(F, extra=extra)
    out.extend(record.lines())
    held = [f"{v}.{k.value}" for (v, k), ok in record.verdicts.items() if ok]
    summary = f"{F.name} belongs to {len(held)} of 12 named classes" + (
        f": {', '.join(held)}." if held else "."
    )
    return OK, summary


def cmd_profile(args, out):
    alg, F = _load_pair(args, out)
    if F is None:
        return CHECK_FAILED, f"{alg.name} is not a BL-algebra."
    kind = FilterKind.parse(args.kind)
    prof = threshold_profile(F, kind)
    out.append(f"profile.{kind.value} = {prof}")
    return OK, f"Level sets of {F.name} are empty or {kind.value} filters exactly on {prof}."


def cmd_verify(args, out):
    alg = _load_algebra(args.algebra)
    if args.grid < 1:
        raise UsageError("grid denominator must be at least 1")
    groups = THEOREM_GROUPS if not args.theorems else tuple(args.theorems.split(","))
    bad = [g for g in groups if g not in THEOREM_GROUPS]
    if bad:
        raise UsageError(f"unknown theorem group(s): {', '.join(bad)}")
    out.append(f"algebra = {alg.name}")
    out.append(f"grid = {args.grid}")
    if not _require_valid(alg, out):
        return CHECK_FAILED, f"{alg.name} is not a BL-algebra."
    ok = True
    if "arithmetic" in groups:
        props = check_arithmetic_properties(alg)
        for name, w in props.results:
            out.append(f"arithmetic.{name} = {'pass' if w is None else 'fail'}")
        ok &= props.passed
    grid = GridSpec(args.grid)
    total = 0
    for group, fn in (
        ("equivalences", verify_equivalences),
        ("decomposition", verify_implicative_decomposition),
    ):
        if group in groups:
            report = fn(alg, grid)
            out.extend(report.lines(prefix=group))
            total += report.instances
            ok &= report.passed
    out.append(f"verify.passed = {_bool(ok)}")
    return (OK if ok else CHECK_FAILED), (
        f"Checked {total} instances on {alg.name} with grid 1/{args.grid}: "
        f"{'no counterexamples' if ok else 'counterexamples found'}."
    )


def cmd_generate(args, out):
    try:
        algs = generate_bl_algebras(args.size)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None
    out.append(f"generate.size = {args.size}")
    out.append(f"generate.count = {len(algs)}")
    ok = True
    for alg in algs:
        valid = validate_bl(alg).valid
        ok &= valid
        out.append(f"{alg.name}.odot = {' | '.join(' '.join(r) for r in alg.odot)}")
        out.append(f"{alg.name}.imp = {' | '.join(' '.join(r) for r in alg.imp)}")
        out.append(f"{alg.name}.bl_valid = {_bool(valid)}")
        if args.out:
            target = Path(args.out)
            try:
                target.mkdir(parents=True, exist_ok=True)
                (target / f"{alg.name}.alg").write_text(format_algebra(alg), encoding="utf-8")
            except OSError as exc:
                raise UsageError(f"cannot write to {target}: {exc}") from None
    return (OK if ok else CHECK_FAILED), (
        f"{len(algs)} BL-algebra(s) with {args.size} elements up to isomorphism."
    )


def cmd_audit(args, out):
    corpus = Path(args.corpus) if args.corpus else default_corpus()
    if not corpus.is_dir():
        raise UsageError(f"no such corpus directory: {corpus}")
    findings = audit_examples(corpus)
    agree = tool = 0
    for f in findings:
        out.extend(f.lines())
        agree += f.agreement
        tool += f.tool_matches_oracle
    out.append(f"audit.examples = {len(findings)}")
    out.append(f"audit.agreeing = {agree}")
    out.append(f"audit.tool_matches_oracle = {tool}")
    ok = bool(findings) and agree == len(findings) and tool == len(findings)
    disagree = [f.example for f in findings if not f.agreement]
    summary = f"{agree} of {len(findings)} examples agree with their annotated claims"
    summary += f"; disagreements: {', '.join(disagree)}." if disagree else "."
    return (OK if ok else CHECK_FAILED), summary


def build_parser():
    p = _Parser(prog="blfilters", description="Finite BL-algebra fuzzy filter workbench.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)
    kinds = [k.value for k in KINDS]

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--summary", action="store_true", help="append a prose summary")
        sp.set_defaults(func=fn)
        return sp

    sp = add("validate", cmd_validate, "check the BL axioms and arithmetic laws")
    sp.add_argument("algebra")
    sp = add("filters", cmd_filters, "list all filters of one kind")
    sp.add_argument("algebra")
    sp.add_argument("--kind", choices=kinds, default="plain")
    sp = add("classify", cmd_classify, "full classification of a fuzzy set")
    sp.add_argument("algebra")
    sp.add_argument("fuzzyset")
    sp.add_argument("--thresholds", nargs=2, action="append", metavar=("ALPHA", "BETA"))
    sp = add("profile", cmd_profile, "threshold profile of a fuzzy set")
    sp.add_argument("algebra")
    sp.add_argument("fuzzyset")
    sp.add_argument("--kind", choices=kinds, default="plain")
    sp = add("verify", cmd_verify, "exhaustive theorem checks over a fuzzy-set grid")
    sp.add_argument("algebra")
    sp.add_argument("--grid", type=int, default=4)
    sp.add_argument("--theorems", help="comma list of " + ",".join(THEOREM_GROUPS))
    sp = add("generate", cmd_generate, "all BL-algebras of a size, up to isomorphism")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--out", help="also write .alg files into this directory")
    sp = add("audit", cmd_audit, "re-check annotated example claims")
    sp.add_argument("corpus", nargs="?", help="corpus directory (default: bundled examples)")
    return p


def run(argv):
    """Execute one command; returns ``(exit status, report text)``."""
    out = []
    try:
        args = build_parser().parse_args(argv)
        status, summary = args.func(args, out)
    except UsageError as exc:
        return USAGE, f"error: {exc}".rstrip() + "\n"
    except (ParseError, AlgebraError, ValueError) as exc:
        return USAGE, f"error: {exc}\n"
    if args.summary:
        out += ["", summary]
    return status, "\n".join(out) + "\n"


def main(argv=None):
    status, text = run(sys.argv[1:] if argv is None else argv)
    (sys.stdout if status != USAGE else sys.stderr).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
