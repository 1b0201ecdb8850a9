//! Sylvester resultants and discriminants by fraction-free elimination.

use super::multipoly::MultiPoly;
use num_traits::{One, Zero};

use super::poly::{PolyError, UniPoly};
use super::rational::Rational;
use super::ring::{ExactDiv, Ring};

/// Determinant by Bareiss elimination with row pivoting.
///
/// Every division is exact, so this works over any integral domain with an
/// exact division (integers, rationals, polynomial rings).
pub fn bareiss_det<C: ExactDiv>(mut m: Vec<Vec<C>>) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    let mut sign = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * &m[k][k] - &(m[i][k].clone() * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n), size m+n.
pub fn sylvester_matrix<C: Ring>(f: &UniPoly<C>, g: &UniPoly<C>) -> Vec<Vec<C>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![C::zero(); size];
        for k in 0..=m {
            row[i + k] = f.coeff(m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![C::zero(); size];
        for k in 0..=n {
            row[i + k] = g.coeff(n - k);
        }
        rows.push(row);
    }
    rows
}

/// `Res(f, g)`, the determinant of the Sylvester matrix.
///
/// Zero if exactly one argument is zero; an error if both are.
pub fn resultant<C: ExactDiv>(f: &UniPoly<C>, g: &UniPoly<C>) -> Result<C, PolyError> {
    match (f.degree(), g.degree()) {
        (None, None) => Err(PolyError::BothZero),
        (None, _) | (_, None) => Ok(C::zero()),
        (Some(0), Some(n)) => Ok(f.coeff(0).power(n as u32)),
        (Some(m), Some(0)) => Ok(g.coeff(0).power(m as u32)),
        _ => Ok(C::determinant(sylvester_matrix(f, g))),
    }
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant<C: ExactDiv>(f: &UniPoly<C>) -> Result<C, PolyError> {
    let n = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if n == 0 {
        return Ok(C::one());
    }
    let r = resultant(f, &f.derivative())?;
    let lc = f.leading_coeff().expect("nonzero");
    let d = r.exact_div(lc).expect("lc(f) divides Res(f, f')");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Discriminant of a polynomial whose coefficients are polynomials in `x`,
/// by specializing `x` at enough integers and interpolating.
pub fn discriminant_by_interpolation(f: &UniPoly<UniPoly<Rational>>) -> Result<UniPoly<Rational>, PolyError> {
    let n = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let d = f.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let needed = (2 * n - 2) * d + 1;
    let lc = f.leading_coeff().expect("nonzero");
    let mut points = Vec::with_capacity(needed);
    let mut x = 0i64;
    while points.len() < needed {
        let at = Rational::from_integer(x.into());
        x += 1;
        if lc.eval(&at).is_zero() {
            continue;
        }
        let g = f.map_coeffs(|c| c.eval(&at));
        points.push((at, discriminant(&g)?));
    }
    Ok(UniPoly::interpolate(&points))
}

/// Resultant of two multivariate polynomials with respect to `var`.
pub fn resultant_in<C: ExactDiv>(f: &MultiPoly<C>, g: &MultiPoly<C>, var: usize) -> Result<MultiPoly<C>, PolyError> {
    resultant(&f.to_univariate(var), &g.to_univariate(var))
}

/// Discriminant of a multivariate polynomial with respect to `var`.
pub fn discriminant_in<C: ExactDiv>(f: &MultiPoly<C>, var: usize) -> Result<MultiPoly<C>, PolyError> {
    discriminant(&f.to_univariate(var))
}
