"""Canonical codes, isomorph-free generation and the small-order search."""

from .canon import are_isomorphic, canonical_code, canonical_form, canonical_labeling, canonical_perm
from .generate import (
    EnumerationResult,
    EnumerationTask,
    enumerate_graphs,
    generate,
    load_checkpoint,
    save_checkpoint,
)
from .verify import SmallCriticalReport, verify_small_critical

__all__ = [
    "are_isomorphic",
    "canonical_code",
    "canonical_form",
    "canonical_labeling",
    "canonical_perm",
    "EnumerationResult",
    "EnumerationTask",
    "enumerate_graphs",
    "generate",
    "load_checkpoint",
    "save_checkpoint",
    "SmallCriticalReport",
    "verify_small_critical",
]
