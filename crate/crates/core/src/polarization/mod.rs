//! The D7-invariant alternating trace pairing on Q(ζ7)^2 and its restriction
//! to the lattice `Z[ζ] + (1 - ζ) Z[ζ]`.

mod pairing;
mod snf;

pub use pairing::{
    action_matrix, gram, integer_determinant, lattice_basis, pairing, GramForm, LatticeBasis, PairingConstants,
    PolarizationError, Vec2,
};
pub use snf::smith_normal_form;
