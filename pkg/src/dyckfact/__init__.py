"""Exact construction, verification and canonical factorization of solutions of
p1(u)·p2(u) = p1(u+α2)·p2(u+α1) via generalized Dyck paths."""

from .errors import (
    BoundExceededError,
    DomainError,
    InvalidPathError,
    NonSplittingError,
    NotASolutionError,
)
from .exactnum import (
    LatticeCoord,
    ShiftPair,
    as_rat,
    coset_base,
    decompose,
    derive_mn,
    format_rat,
    lattice_member,
    recompose,
    root_key,
    same_coset,
    xi,
)
from .factorizer import (
    Factorization,
    Triviality,
    c_integral_split,
    canonical_factorization,
    factor_completely,
    find_fundamental_divisor,
    multiquiver_factorization,
    multiquiver_shifts,
    multiquiver_solution,
    reconstruct,
    triviality_check,
)
from .paths import (
    CylPath,
    DyckPath,
    area,
    canonical_orbit_rep,
    cyl_leq,
    cyl_path,
    enumerate_dyck,
    is_dyck,
    path_to_word,
    render_path,
    word_to_path,
    zero_area_path,
)
from .polyring import MonicPoly, SolutionPair, from_coeffs, product
from .solutions import (
    Degenerate,
    FundamentalSolution,
    classify_degenerate,
    dyck_label,
    equivalent,
    fundamental,
    fundamental_from_word,
    partial_sums,
    rescale,
    satisfies,
    verify,
)
from .words import (
    balanced_window,
    count_irr_orbits,
    cyclic_split,
    in_M,
    is_cyclically_irreducible,
    shift,
)

__version__ = "0.1.0"
