//! Exact arithmetic: rationals, Q(ζ7), polynomials, resultants.

pub mod cyclotomic;
pub mod multipoly;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod squarefree;

pub use cyclotomic::{cyc_conj, cyc_trace, CycNum};
pub use multipoly::MultiPoly;
pub use poly::{poly_divrem, PolyError, UniPoly};
pub use rational::{format_rational, int, parse_rational, rat, ParseRationalError, Rational};
pub use resultant::{
    bareiss_det, discriminant, discriminant_by_interpolation, discriminant_in, resultant, resultant_in,
    sylvester_matrix,
};
pub use ring::{ExactDiv, Field, Ring};
pub use squarefree::{is_squarefree, squarefree_decompose};
