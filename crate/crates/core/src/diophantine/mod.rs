//! Solving `s7(X)^2 - X^7 = F6(X) * Q4(X)^2` from four interpolation nodes.

mod cramer;
mod hermite;
mod validity;

use num_traits::One;
use rand::Rng;
use thiserror::Error;

use crate::exactcore::{Rational, Ring, UniPoly};

pub use cramer::cramer_s7;
pub use hermite::{hermite_s7, hermite_s7_with_signs};
pub use validity::{extract_f6, validate, ValidityReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("node {0} is zero")]
    DegenerateNode(usize),
    #[error("nodes {0} and {1} have the same square")]
    NodeCollision(usize, usize),
    #[error("the interpolation system is singular")]
    SingularSystem,
    #[error("Q4^2 does not divide s7^2 - X^7")]
    NotDivisible,
    #[error("s7^2 - X^7 is a 7th power (excluded degenerate branch)")]
    SeventhPower,
}

/// Four rational interpolation nodes; the roots of `Q4` are their squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaParams {
    pub beta: [Rational; 4],
}

impl BetaParams {
    /// Unchecked; call [`BetaParams::validate`] before solving.
    pub fn new(beta: [Rational; 4]) -> Self {
        Self { beta }
    }

    pub fn from_ints(b: [i64; 4]) -> Self {
        Self::new(b.map(Rational::from_i64))
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        for (i, b) in self.beta.iter().enumerate() {
            if num_traits::Zero::is_zero(b) {
                return Err(SolverError::DegenerateNode(i));
            }
        }
        let sq = self.squares();
        for i in 0..4 {
            for j in i + 1..4 {
                if sq[i] == sq[j] {
                    return Err(SolverError::NodeCollision(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn squares(&self) -> [Rational; 4] {
        std::array::from_fn(|i| self.beta[i].clone() * &self.beta[i])
    }

    /// `Π (X - beta_i^2)`
    pub fn q4(&self) -> UniPoly<Rational> {
        self.squares()
            .iter()
            .fold(UniPoly::one(), |acc, r| acc * &UniPoly::linear_root(r))
    }

    pub fn scaled(&self, lambda: &Rational) -> Self {
        Self::new(std::array::from_fn(|i| self.beta[i].clone() * lambda))
    }

    /// Random valid tuple: numerators in `[-20, 20]`, denominators in
    /// `[1, 10]`, redrawn until the nodes are nonzero with distinct squares.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let p = Self::new(std::array::from_fn(|_| {
                Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=10).into())
            }));
            if p.validate().is_ok() {
                return p;
            }
        }
    }
}

/// Interpolation data for node `i`: position `beta^2`, value `±beta^7`, and
/// slope `±(7/2) beta^5`.
pub(crate) fn node_conditions(p: &BetaParams, signs: [i8; 4]) -> Vec<(Rational, Rational, Rational)> {
    let half7 = Rational::new(7.into(), 2.into());
    p.beta
        .iter()
        .zip(signs)
        .map(|(b, e)| {
            let e = Rational::from_i64(if e < 0 { -1 } else { 1 });
            let b5 = b.power(5);
            let b7 = b5.clone() * b * b;
            (b.clone() * b, e.clone() * &b7, e * &half7 * &b5)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOutput {
    pub s7: UniPoly<Rational>,
    pub q4: UniPoly<Rational>,
    pub f6: UniPoly<Rational>,
    pub validity: ValidityReport,
}

impl SolverOutput {
    /// `deg s7 = 7`; special nodes can make the top coefficient vanish.
    pub fn is_generic(&self) -> bool {
        self.s7.degree() == Some(7)
    }

    /// `s7^2 - X^7 - F6 Q4^2`, which must be zero.
    pub fn identity_residual(&self) -> UniPoly<Rational> {
        self.s7.power(2) - &UniPoly::monomial(Rational::one(), 7) - &(self.f6.clone() * &self.q4.power(2))
    }
}

/// Hermite solution plus `F6` and its validity flags.
pub fn solve(p: &BetaParams) -> Result<SolverOutput, SolverError> {
    let s7 = hermite_s7(p)?;
    let q4 = p.q4();
    let f6 = extract_f6(&s7, &q4)?;
    let mut out = SolverOutput {
        s7,
        q4,
        f6,
        validity: ValidityReport::default(),
    };
    out.validity = validate(&out);
    if !out.validity.seventh_power_check {
        return Err(SolverError::SeventhPower);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn validation_errors() {
        assert_eq!(
            BetaParams::from_ints([1, -1, 2, 3]).validate(),
            Err(SolverError::NodeCollision(0, 1))
        );
        assert_eq!(
            BetaParams::from_ints([1, 0, 2, 3]).validate(),
            Err(SolverError::DegenerateNode(1))
        );
        assert!(BetaParams::from_ints([1, 2, 3, 5]).validate().is_ok());
    }

    #[test]
    fn solve_generic_nodes() {
        let out = solve(&BetaParams::from_ints([1, 2, 3, 5])).unwrap();
        assert!(out.is_generic());
        assert!(out.identity_residual().is_zero());
        assert_eq!(out.f6.degree(), Some(6));
        assert_eq!(out.f6.leading_coeff(), Some(&out.s7.leading_coeff().unwrap().power(2)));
        assert!(out.validity.all());
    }
}
