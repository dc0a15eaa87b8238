from ._berezin import (
    BerezinError,
    berezin_eigenvalue,
    berezin_transform,
    canonical_text,
    covariant_symbol,
    covariant_symbol_json,
    laplace,
    poisson,
    run_cli,
    sl2_contravariant,
    sl2_covariant,
    star,
    symbol_json,
    verify,
)

__all__ = [
    "BerezinError",
    "berezin_eigenvalue",
    "berezin_transform",
    "canonical_text",
    "covariant_symbol",
    "covariant_symbol_json",
    "laplace",
    "poisson",
    "run_cli",
    "sl2_contravariant",
    "sl2_covariant",
    "star",
    "symbol_json",
    "verify",
]
