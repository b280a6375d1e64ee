"""Exact transvectants, combinants and quadratic syzygies of binary forms."""

from ._core import (
    DegeneratePencil,
    DegreeMismatch,
    DivisionByZero,
    Form,
    FormulaViolation,
    NotDivisible,
    ParseError,
    PencilError,
    PreconditionError,
    combinant_9j_arrays,
    combinants,
    evaluate_syzygy,
    exact_divide,
    gamma,
    membership_defect,
    random_form,
    random_pencil,
    recover_combinant,
    syzygy_space_dim,
    syzygy_table,
    theta,
    transvectant,
    verify_theta,
    wigner3j,
    wigner6j,
    wigner9j,
    wronskian,
)

__all__ = [name for name in dir() if not name.startswith("_")]
