from .audit import AuditFinding, audit_examples, default_corpus
from .generate import generate_bl_algebras, generate_bl_algebras_naive
from .oracle import oracle_verdict
from .sweeps import (
    BATTERY,
    EquivalenceReport,
    GridSpec,
    enumerate_fuzzy_sets,
    verify_equivalences,
    verify_implicative_decomposition,
)

__all__ = [
    "AuditFinding",
    "BATTERY",
    "EquivalenceReport",
    "GridSpec",
    "audit_examples",
    "default_corpus",
    "enumerate_fuzzy_sets",
    "generate_bl_algebras",
    "generate_bl_algebras_naive",
    "oracle_verdict",
    "verify_equivalences",
    "verify_implicative_decomposition",
]
