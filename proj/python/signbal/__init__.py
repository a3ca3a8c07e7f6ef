"""Pattern containment, avoidance-class enumeration, and sign balance."""

from ._signbal import (
    GuardError,
    avoids_all,
    balance_over_range,
    catalan,
    check_catalan_excess_321,
    class_cardinality,
    complement,
    count_occurrences,
    direct_sum,
    enumerate,
    find_occurrence,
    from_word,
    identity,
    insert_max,
    inversions,
    invert,
    lis_lds,
    noninversions,
    parity,
    parse,
    pattern_set_is_sign_balanced,
    reverse,
    scan_pairs_length4,
    signed_count,
    skew_sum,
    slice_by_max_position,
    standardize,
    swap_positions,
    symmetry_orbit,
    to_string,
    transform_set,
    verification_targets,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
