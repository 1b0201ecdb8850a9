//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already keeps values in lowest terms with a
//! positive denominator, so it is used directly as the base field.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::poly::UniPoly;
use super::ring::{ExactDiv, Field, Ring};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    /// Primitive remainder sequence over the integers.
    fn poly_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        let (mut p, mut q) = (primitive_integer(a), primitive_integer(b));
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = p.pseudo_rem(&q).expect("q is nonzero");
            p = q;
            q = primitive(&r);
        }
        p.map_coeffs(|c| Rational::from_integer(c.clone())).monic()
    }
}

fn primitive(p: &UniPoly<BigInt>) -> UniPoly<BigInt> {
    let g = p.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        p.clone()
    } else {
        p.map_coeffs(|c| c / &g)
    }
}

/// Integer multiple of `p` with coprime coefficients.
fn primitive_integer(p: &UniPoly<Rational>) -> UniPoly<BigInt> {
    let d = Rational::from_integer(common_denominator(p.coeffs()));
    primitive(&p.map_coeffs(|c| (c * &d).to_integer()))
}

impl ExactDiv for Rational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_by(d)
    }

    /// Clears denominators row by row and eliminates over the integers.
    fn determinant(m: Vec<Vec<Self>>) -> Self {
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = m
            .iter()
            .map(|row| {
                let d = common_denominator(row);
                let out = row
                    .iter()
                    .map(|q| (q * Rational::from_integer(d.clone())).to_integer())
                    .collect();
                scale *= d;
                out
            })
            .collect();
        Rational::new(super::resultant::bareiss_det(rows), scale)
    }
}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q`, a plain integer, or a terminating decimal such as `-0.125`.
///
/// Decimals are converted exactly; no floating point is involved.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let malformed = || ParseRationalError::Malformed(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| malformed())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| malformed())?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let digits = format!("{whole_digits}{frac}");
        let digits = if digits.is_empty() { "0".to_string() } else { digits };
        let mut n = BigInt::from_str(&digits).map_err(|_| malformed())?;
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10u32), frac.len());
        return Ok(Rational::new(n, d));
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| malformed())
}

/// Canonical `num/den` form; integers are written with denominator 1.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Integer value if `q` is integral.
pub fn to_integer(q: &Rational) -> Option<BigInt> {
    is_integer(q).then(|| q.numer().clone())
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("3/7").unwrap(), rat(3, 7));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rational("-2.5").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
    }

    #[test]
    fn rejects_bad_literals() {
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1e5").is_err());
    }

    #[test]
    fn lowest_terms_and_formatting() {
        let q = rat(10, -4);
        assert_eq!(format_rational(&q), "-5/2");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&Rational::zero()), "0/1");
        assert!(is_integer(&rat(8, 4)));
    }

    #[test]
    fn common_denominator_is_lcm() {
        let v = [rat(1, 4), rat(1, 6), int(5)];
        assert_eq!(common_denominator(&v), BigInt::from(12));
    }
}
