use num_traits::Zero;

use super::{node_conditions, BetaParams, SolverError};
use crate::exactcore::{ExactDiv, Field, Rational, Ring, UniPoly};

/// Solves the 8x8 linear system for the coefficients of `s7` by Cramer's rule.
pub fn cramer_s7(p: &BetaParams) -> Result<UniPoly<Rational>, SolverError> {
    for (i, b) in p.beta.iter().enumerate() {
        if b.is_zero() {
            return Err(SolverError::DegenerateNode(i));
        }
    }
    let data = node_conditions(p, [1; 4]);
    let mut rows = Vec::with_capacity(8);
    let mut rhs = Vec::with_capacity(8);
    for (x, y, d) in &data {
        rows.push((0..8).map(|k| x.power(k)).collect::<Vec<_>>());
        rhs.push(y.clone());
        rows.push(
            (0..8)
                .map(|k| {
                    if k == 0 {
                        Rational::zero()
                    } else {
                        Rational::from_i64(k as i64) * &x.power(k - 1)
                    }
                })
                .collect(),
        );
        rhs.push(d.clone());
    }
    let det = Rational::determinant(rows.clone());
    let inv = det.inv().ok_or(SolverError::SingularSystem)?;
    let coeffs = (0..8)
        .map(|col| {
            let mut m = rows.clone();
            for (row, r) in m.iter_mut().zip(&rhs) {
                row[col] = r.clone();
            }
            Rational::determinant(m) * &inv
        })
        .collect();
    Ok(UniPoly::new(coeffs))
}
