from ._core import (
    AlgebraContext,
    AlgebraElement,
    Error,
    basis_elem,
    big_b,
    build,
    build_prefix,
    carry_sequence,
    cross_validate,
    digits,
    element_from_json,
    factor_sequence,
    is_prime,
    kostka,
    lucas_binom,
    mul,
    one,
    psi,
    psi_recursion_check,
    realize_element,
    scale,
    square_identity_holds,
    structure_constant,
    summands,
    two_row_partitions,
    verify_complete_set,
    zero,
)

__all__ = [name for name in dir() if not name.startswith("_")]
