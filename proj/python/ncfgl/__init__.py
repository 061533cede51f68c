"""Exact calculus of the noncommutative formal group law."""

from ._core import (
    BadInput,
    Engine,
    FreePoly,
    NotInvertible,
    PrecisionExhausted,
    chern,
    commutator,
    express,
    generator_counts,
    graded_dims,
    qsym_mul_monomials,
    ranks,
    reproduce_figures,
    run_suite,
)

__all__ = [
    "BadInput",
    "Engine",
    "FreePoly",
    "NotInvertible",
    "PrecisionExhausted",
    "chern",
    "commutator",
    "express",
    "generator_counts",
    "graded_dims",
    "qsym_mul_monomials",
    "ranks",
    "reproduce_figures",
    "run_suite",
]
