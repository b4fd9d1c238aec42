"""
Re-check annotated classification claims against the machine verdicts.

A corpus directory holds algebra files, fuzzy-set files and one ``.audit``
sidecar per example::

    example Example 2.10
    algebra example_2_2.alg
    fuzzyset example_2_10.fs
    claim thresholds 2/5 3/5 plain true
    claim overline plain false
    end

An optional ``chain e1 e2 ... en`` line records an ordering asserted in
prose (ascending); it is checked against the order derived from the
residuum table and reported separately from the claims.

Each claim is decided twice, by the taxonomy engine and by the independent
oracle. A tool/oracle split is a bug; a claim/machine split is a finding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..algebra import parse_algebra, validate_bl
from ..errors import AlgebraError, ParseError
from ..filters import FilterKind
from ..fuzzy import parse_fuzzy_set
from ..taxonomy import classify, parse_variant, threshold_violation
from .oracle import oracle_verdict


@dataclass(frozen=True)
class Claim:
    text: str
    variant: object
    kind: FilterKind
    expected: bool


@dataclass(frozen=True)
class AuditSpec:
    example: str
    algebra: str
    fuzzyset: str
    claims: tuple
    chain: tuple = ()


def parse_audit(text):
    example = algebra = fuzzyset = None
    claims = []
    chain = ()
    ended = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if ended:
            raise ParseError("content after 'end'", lineno)
        head, _, rest = body.partition(" ")
        rest = rest.strip()
        if head == "example" and rest:
            example = rest
        elif head == "algebra" and rest:
            algebra = rest
        elif head == "fuzzyset" and rest:
            fuzzyset = rest
        elif head == "claim":
            toks = rest.split()
            if len(toks) < 3 or toks[-1] not in ("true", "false"):
                raise ParseError("expected 'claim <variant> <kind> true|false'", lineno)
            try:
                variant = parse_variant(toks[:-2])
                kind = FilterKind.parse(toks[-2])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            claims.append(Claim(rest, variant, kind, toks[-1] == "true"))
        elif head == "chain" and len(rest.split()) >= 2:
            chain = tuple(rest.split())
        elif head == "end" and not rest:
            ended = True
        else:
            raise ParseError(f"unexpected line '{body}'", lineno)
    for key, val in (("example", example), ("algebra", algebra), ("fuzzyset", fuzzyset)):
        if val is None:
            raise ParseError(f"missing '{key}' line")
    if not claims:
        raise ParseError("no claims")
    return AuditSpec(example, algebra, fuzzyset, tuple(claims), chain)


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    machine: bool
    oracle: bool
    witness: str | None

    @property
    def agrees(self):
        return self.machine == self.claim.expected


@dataclass(frozen=True)
class AuditFinding:
    example: str
    source: str
    results: tuple = ()
    error: str | None = None
    chain: tuple = ()
    chain_witness: str | None = None  # first pair breaking the declared chain

    @property
    def agreement(self):
        return self.error is None and all(r.agrees for r in self.results)

    @property
    def tool_matches_oracle(self):
        return self.error is None and all(r.machine == r.oracle for r in self.results)

    def lines(self):
        key = Path(self.source).stem
        out = [f"audit.{key}.example = {self.example}"]
        if self.error is not None:
            out.append(f"audit.{key}.error = {self.error}")
            return out
        for i, r in enumerate(self.results, start=1):
            p = f"audit.{key}.claim{i}"
            out.append(f"{p} = {r.claim.text}")
            out.append(f"{p}.machine = {str(r.machine).lower()}")
            out.append(f"{p}.oracle = {str(r.oracle).lower()}")
            out.append(f"{p}.agrees = {str(r.agrees).lower()}")
            if not r.agrees:
                out.append(f"{p}.witness = {r.witness}")
        if self.chain:
            out.append(f"audit.{key}.declared_chain = {'<'.join(self.chain)}")
            out.append(f"audit.{key}.declared_chain.holds = {str(self.chain_witness is None).lower()}")
            if self.chain_witness is not None:
                out.append(f"audit.{key}.declared_chain.witness = {self.chain_witness}")
        out.append(f"audit.{key}.agreement = {str(self.agreement).lower()}")
        out.append(f"audit.{key}.tool_matches_oracle = {str(self.tool_matches_oracle).lower()}")
        return out


def audit_file(path):
    path = Path(path)
    try:
        spec = parse_audit(path.read_text(encoding="utf-8"))
    except (OSError, ParseError) as exc:
        return AuditFinding(path.stem, path.name, error=str(exc))
    try:
        alg = parse_algebra((path.parent / spec.algebra).read_text(encoding="utf-8"))
        report = validate_bl(alg)
        if not report.valid:
            raise AlgebraError(f"{alg.name} fails {report.violations[0][0]}")
        F = parse_fuzzy_set((path.parent / spec.fuzzyset).read_text(encoding="utf-8"), alg)
    except (OSError, ParseError, AlgebraError) as exc:
        return AuditFinding(spec.example, path.name, error=str(exc))

    extra = [c.variant for c in spec.claims if c.variant.token == "thresholds"]
    record = classify(F, extra=extra)
    degrees = F.membership
    results = []
    for c in spec.claims:
        v = c.variant
        machine = record.verdict(v, c.kind)
        oracle = oracle_verdict(alg, degrees, v.token, c.kind.value, v.alpha, v.beta)
        if machine:
            witness = "no violating instance"
        else:
            witness = threshold_violation(F, v.alpha, v.beta, c.kind).render()
        results.append(ClaimResult(c, machine, oracle, witness))
    try:
        chain_witness = check_chain(alg, spec.chain)
    except AlgebraError as exc:
        return AuditFinding(spec.example, path.name, error=str(exc))
    return AuditFinding(spec.example, path.name, tuple(results), None, spec.chain, chain_witness)


def check_chain(alg, chain):
    """None if ``chain`` lists every element in ascending derived order,
    else a short description of the first offending pair."""
    if not chain:
        return None
    if sorted(chain) != sorted(alg.elements):
        raise AlgebraError(f"declared chain {' '.join(chain)} does not list the carrier")
    idx = [alg.idx(e) for e in chain]
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            x, y = idx[i], idx[j]
            if not alg.le[x][y]:
                rel = "incomparable" if not alg.le[y][x] else "reversed"
                return f"{chain[i]},{chain[j]} {rel}"
    return None


def audit_examples(corpus):
    """One finding per ``*.audit`` file in ``corpus``, in file-name order."""
    corpus = Path(corpus)
    if not corpus.is_dir():
        raise FileNotFoundError(f"no such corpus directory: {corpus}")
    return [audit_file(p) for p in sorted(corpus.glob("*.audit"))]


def default_corpus():
    return Path(__file__).resolve().parent.parent / "corpus"
