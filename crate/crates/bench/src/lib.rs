//! Fixed inputs shared by the benchmarks.

use zeta7_core::curvefactory::{quartic_specialize, QuarticFamily, QuarticFixture};
use zeta7_core::diophantine::{solve, BetaParams};
use zeta7_core::exactcore::{Rational, UniPoly};

pub fn small_nodes() -> BetaParams {
    BetaParams::from_ints([1, 2, 3, 5])
}

pub fn rational_nodes() -> BetaParams {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    BetaParams::new([r(-7, 3), r(11, 2), r(5, 9), r(17, 4)])
}

/// `(s7, q4, f6)` for the small nodes.
pub fn solved(p: &BetaParams) -> (UniPoly<Rational>, UniPoly<Rational>, UniPoly<Rational>) {
    let out = solve(p).expect("bench nodes are valid");
    (out.s7, out.q4, out.f6)
}

pub fn base_quartic() -> QuarticFixture {
    quartic_specialize(QuarticFamily::Base, &Rational::from_integer(0.into())).expect("base quartic")
}
