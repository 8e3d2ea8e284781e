"""2-face census of order and chain polytopes of finite posets."""

from ._core import (
    InputError,
    OracleError,
    Poset,
    PosetError,
    all_posets,
    alpha,
    bijection,
    census,
    f_vector,
    is_x_free,
    named_poset,
    oracle,
    oracle_f_vector,
    phi,
    random_poset,
    to_dot,
    verify,
)

__all__ = [
    "InputError",
    "OracleError",
    "Poset",
    "PosetError",
    "all_posets",
    "alpha",
    "bijection",
    "census",
    "f_vector",
    "is_x_free",
    "named_poset",
    "oracle",
    "oracle_f_vector",
    "phi",
    "random_poset",
    "to_dot",
    "verify",
]
