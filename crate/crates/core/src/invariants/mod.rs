//! Polynomial invariants: Specht generators, jellyfish invariants, perfect
//! orientations, consistent labellings and web invariants `[W, O]`.
//!
//! Polynomials live in the variables `x_{i,j}` of a `ν × n` matrix and every
//! term uses exactly one variable per column, so a term is a word in `[ν]^n`.
//! The symmetric group acts by permuting columns and `SL3` acts on the first
//! three rows by left multiplication.

mod labelling;
mod linalg;
mod orientation;
mod poly;
mod specht;

pub use labelling::{
    decorated_boundary_word, difference_data, enumerate_consistent_labellings, interior_matchings,
    invariant_from_labellings, labelling_sign_decorated, labelling_sign_weight, labelling_violations, nu,
    signed_labellings, web_invariant, ConsistentLabelling, DifferenceData,
};
pub use linalg::{expand_in_basis, rank, LeadingBasis, SpanBasis};
pub use orientation::{
    canonical_sink_order, directed_short_face, enumerate_perfect_orientations, find_constrained_orientation,
    find_perfect_orientation, for_each_admissible_orientation, is_admissible, orientation_sign, orientation_violations,
    swivel, OrientationConstraints, PerfectOrientation,
};
pub use poly::{cmp_leading, det3, inversions, permutation_sign, rat, Monomial, Polynomial, MAX_COLUMNS, MAX_ROW};
pub use specht::{
    jellyfish_invariant, jellyfish_tableaux, jellyfish_term, minor, permutations, specht_generator, JellyfishTableau,
};

use crate::error::Result;
use crate::plabic::PlabicGraph;

/// `[W, O_W]` for the canonical orientation `O_W` (first found, canonical sink order).
pub fn canonical_invariant(g: &PlabicGraph) -> Result<(PerfectOrientation, Polynomial)> {
    let o = find_perfect_orientation(g)?;
    let p = web_invariant(g, &o)?;
    Ok((o, p))
}
