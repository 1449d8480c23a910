"""Twisted loop-homology algebras over finite groups (exact arithmetic)."""

from ._core import (  # noqa: F401
    Algebra,
    Cochain2,
    CoproductUndefined,
    Error,
    FiniteAbelianGroup,
    FiniteGroup,
    InputError,
    TwistedAlgebra,
    ValidationError,
    WindowOverflow,
    carrying_cocycle,
    circle_model,
    class_order,
    coboundary,
    cohomologous,
    cpl_minimal_model,
    cyclic,
    from_table,
    h2_order,
    is_cocycle,
    load_config,
    load_presentation,
    parse_coeff,
    parse_group,
    product,
    run_cli,
)

__version__ = "0.1.0"
