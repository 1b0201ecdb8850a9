use num_traits::{One, Zero};

use super::{node_conditions, BetaParams, SolverError};
use crate::exactcore::{Field, Rational, UniPoly};

/// Degree-7 Hermite interpolant with `s7(b^2) = b^7` and `2 s7'(b^2) = 7 b^5`
/// at the four nodes, in Lagrange form.
pub fn hermite_s7(p: &BetaParams) -> Result<UniPoly<Rational>, SolverError> {
    hermite_s7_with_signs(p, [1; 4])
}

/// As [`hermite_s7`], with `s7(b^2) = sign * b^7` chosen per node.
pub fn hermite_s7_with_signs(p: &BetaParams, signs: [i8; 4]) -> Result<UniPoly<Rational>, SolverError> {
    p.validate()?;
    let data = node_conditions(p, signs);
    let mut acc = UniPoly::zero();
    for (i, (xi, yi, di)) in data.iter().enumerate() {
        let mut basis = UniPoly::one();
        let mut denom = Rational::one();
        // L_i'(x_i) = Σ_{j≠i} 1/(x_i - x_j)
        let mut slope = Rational::zero();
        for (j, (xj, _, _)) in data.iter().enumerate() {
            if i == j {
                continue;
            }
            let gap = xi.clone() - xj;
            slope += &gap.inv().ok_or(SolverError::NodeCollision(i.min(j), i.max(j)))?;
            basis = basis * &UniPoly::linear_root(xj);
            denom *= &gap;
        }
        let lag = basis.scale(&denom.inv().expect("nonzero"));
        let lag2 = lag.power(2);
        let lin = UniPoly::linear_root(xi);
        // (1 - 2 L_i'(x_i)(x - x_i)) y_i + (x - x_i) d_i
        let two_slope = slope.clone() + &slope;
        let weight = UniPoly::constant(yi.clone()) - &lin.scale(&(two_slope * yi)) + &lin.scale(di);
        acc = acc + &(weight * &lag2);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat, Ring};

    #[test]
    fn residuals_vanish() {
        let p = BetaParams::from_ints([1, 2, 3, 4]);
        let s7 = hermite_s7(&p).unwrap();
        let ds = s7.derivative();
        for b in 1..=4i64 {
            let x = int(b * b);
            assert_eq!(s7.eval(&x), int(b).power(7));
            assert_eq!(int(2) * &ds.eval(&x), int(7) * &int(b).power(5));
        }
    }

    #[test]
    fn matches_known_coefficients() {
        let s7 = hermite_s7(&BetaParams::from_ints([1, 2, 3, 4])).unwrap();
        let expected = [
            rat(-2208, 8575),
            rat(107644, 128625),
            rat(-306497, 264600),
            rat(73770251, 55566000),
            rat(23114851, 88905600),
            rat(-6999, 784000),
            rat(4877, 17781120),
            rat(-1739, 444528000),
        ];
        assert_eq!(s7.coeffs(), &expected);
    }

    #[test]
    fn scaling_covariance() {
        let p = BetaParams::from_ints([1, 2, 3, 5]);
        let lambda = rat(3, 2);
        let base = hermite_s7(&p).unwrap();
        let scaled = hermite_s7(&p.scaled(&lambda)).unwrap();
        let l2 = lambda.clone() * &lambda;
        let sub = base
            .compose(&UniPoly::new(vec![int(0), l2.inv().unwrap()]))
            .scale(&lambda.power(7));
        assert_eq!(scaled, sub);
    }

    #[test]
    fn collision_rejected() {
        assert_eq!(
            hermite_s7(&BetaParams::from_ints([1, -1, 2, 3])),
            Err(SolverError::NodeCollision(0, 1))
        );
    }

    #[test]
    fn sign_flip_changes_value() {
        let p = BetaParams::from_ints([1, 2, 3, 5]);
        let s = hermite_s7_with_signs(&p, [1, -1, 1, 1]).unwrap();
        assert_eq!(s.eval(&int(4)), int(-128));
    }
}
