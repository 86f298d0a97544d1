"""Exact computations in the elliptic Weyl groups of type A1(1,1) and A1(1,1)*."""

from .cayley import BfsReport, bfs_lengths, dump_cayley, verify_length_formula
from .exact import ExactMatrix, ExactVector, Rational, mat_apply, mat_eq, mat_mul
from .group import (
    NormalForm,
    identity,
    nf_generator,
    nf_invert,
    nf_length,
    nf_multiply,
    reduce_word,
    sphere,
)
from .reflection import (
    PairingTable,
    ReflectionSet,
    build_pairing_table,
    build_reflections,
    central_matrix,
    check_center,
    word_to_matrix,
)
from .series import (
    RationalFunction,
    TruncatedSeries,
    affine_weyl_series,
    elliptic_closed_form,
    expand,
    finite_weyl_series,
    series_eq,
    six_term_decomposition,
)
from .words import GroupKind, Word, parse_word

__version__ = "0.1.0"
