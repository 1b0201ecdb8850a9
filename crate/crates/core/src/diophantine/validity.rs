use num_traits::{One, Zero};

use super::{SolverError, SolverOutput};
use crate::exactcore::{discriminant, is_squarefree, squarefree_decompose, Rational, UniPoly};

/// Remark-style genericity flags for one solution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub f6_squarefree: bool,
    pub f6_disc_nonzero: bool,
    pub gcd_condition: bool,
    pub seventh_power_check: bool,
}

impl ValidityReport {
    pub fn all(&self) -> bool {
        self.f6_squarefree && self.f6_disc_nonzero && self.gcd_condition && self.seventh_power_check
    }
}

/// `(s7^2 - X^7) / Q4^2`, which must be exact.
pub fn extract_f6(s7: &UniPoly<Rational>, q4: &UniPoly<Rational>) -> Result<UniPoly<Rational>, SolverError> {
    let lhs = s7.power(2) - &UniPoly::monomial(Rational::one(), 7);
    let (q, r) = lhs.div_rem(&q4.power(2)).map_err(|_| SolverError::NotDivisible)?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(SolverError::NotDivisible)
    }
}

pub fn validate(out: &SolverOutput) -> ValidityReport {
    let f6 = &out.f6;
    let f6_squarefree = is_squarefree(f6);
    let f6_disc_nonzero = !f6.is_zero() && discriminant(f6).is_ok_and(|d| !d.is_zero());
    // same radicals as gcd(s7^2, F6 Q4^2)
    let gcd_condition = out.s7.gcd(&(f6.clone() * &out.q4)).is_constant();
    // a square-free nonconstant F6 leaves a factor of multiplicity 1 or 3
    let seventh_power_check = (f6_squarefree && f6.degree().is_some_and(|d| d > 0)) || {
        let lhs = out.s7.power(2) - &UniPoly::monomial(Rational::one(), 7);
        match squarefree_decompose(&lhs) {
            Ok(parts) => parts.is_empty() || parts.iter().any(|(_, m)| m % 7 != 0),
            Err(_) => false,
        }
    };
    ValidityReport {
        f6_squarefree,
        f6_disc_nonzero,
        gcd_condition,
        seventh_power_check,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diophantine::{hermite_s7, BetaParams};
    use crate::exactcore::{int, rat};

    #[test]
    fn perturbed_solution_is_not_divisible() {
        let p = BetaParams::from_ints([1, 2, 3, 4]);
        let s7 = hermite_s7(&p).unwrap() + &UniPoly::constant(int(1));
        assert_eq!(extract_f6(&s7, &p.q4()), Err(SolverError::NotDivisible));
    }

    #[test]
    fn fixture_quotient_has_degree_six() {
        let h = UniPoly::<Rational>::from_ints(&[0, 0, 1, -2, 0, 4, 3, 1]).scale(&rat(1, 2));
        let lhs = h.power(2) - &UniPoly::monomial(int(1), 7);
        let q4 = crate::exactcore::squarefree::repeated_part(&lhs).unwrap();
        assert_eq!(q4.degree(), Some(4));
        assert_eq!(extract_f6(&h, &q4).unwrap().degree(), Some(6));
    }

    #[test]
    fn spoiled_f6_fails_squarefree() {
        let p = BetaParams::from_ints([1, 2, 3, 5]);
        let mut out = crate::diophantine::solve(&p).unwrap();
        let root = UniPoly::linear_root(&int(1));
        out.f6 = out.f6.clone() * &root * &root;
        let v = validate(&out);
        assert!(!v.f6_squarefree);
        assert!(!v.f6_disc_nonzero);
    }
}
