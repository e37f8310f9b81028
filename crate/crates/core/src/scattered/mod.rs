//! Scattered orders built as ω*-sums of ordinals ending in `ω^ω`, and
//! ℤ-sums of them: the `L_i` family, its `·ω` action, isomorphism
//! invariants (Slater's criterion, ladders, spectra), and cut classes.

pub mod cuts;
pub mod ladder;
pub mod schema;
pub mod spectrum;
pub mod zsum;

pub use cuts::{cut_types, end_data, gap_profile, CutType, EndData, GapProfile};
pub use ladder::{coalescence, cut_type, ladder, ladder_types, next_rung, Cut, Ladder};
pub use schema::{
    l_family_index, make_l, rj4_mul_omega, slater_iso, slater_match, Affine, EvAffineSeq, Rj4Order,
    SlaterMatch,
};
pub use spectrum::{spectra_tail_equivalent, spectrum, Spectrum};
pub use zsum::{make_i, zsum_iso, zsum_match, zsum_mul_omega, BlockMap, IVariant, ZBlockSum};
