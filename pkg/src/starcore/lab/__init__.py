"""Mechanical verification of the additive and block-matrix core-inverse results."""

from .checkers import (
    CHECKERS,
    SIGNATURES,
    check_corollary_3_2,
    check_corollary_3_3,
    check_corollary_4_4,
    check_lemma_2_1,
    check_lemma_2_2,
    check_lemma_2_3,
    check_lemma_2_4,
    check_lemma_4_1,
    check_lemma_4_2,
    check_theorem_3_1,
    check_theorem_4_3,
    run_checker,
)
from .generators import FAMILIES, Instance, draw, generate
from .report import Condition, TheoremId, TheoremReport, Verdict
from .suite import SuiteConfig, SuiteResult, replay, run_suite

__all__ = [
    "CHECKERS", "SIGNATURES", "FAMILIES", "Condition", "Instance", "SuiteConfig", "SuiteResult",
    "TheoremId", "TheoremReport", "Verdict", "check_corollary_3_2", "check_corollary_3_3",
    "check_corollary_4_4", "check_lemma_2_1", "check_lemma_2_2", "check_lemma_2_3",
    "check_lemma_2_4", "check_lemma_4_1", "check_lemma_4_2", "check_theorem_3_1",
    "check_theorem_4_3", "draw", "generate", "replay", "run_checker", "run_suite",
]
