//! Dense univariate polynomials, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use super::ring::{ExactDiv, Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("both arguments are the zero polynomial")]
    BothZero,
}

/// Polynomial `c0 + c1 x + ... + cn x^n` with `cn != 0`.
///
/// The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `x - root`
    pub fn linear_root(root: &C) -> Self {
        Self::new(vec![-root.clone(), C::one()])
    }

    pub fn from_ints(ints: &[i64]) -> Self {
        Self::new(ints.iter().map(|&n| C::from_i64(n)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn degree_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| C::from_i64(k as i64) * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * g + &Self::constant(c.clone()))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Splits `p(x) = even(x^2) + x * odd(x^2)`.
    pub fn even_odd_parts(&self) -> (Self, Self) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Self::new(even), Self::new(odd))
    }

    /// `Z^n * p(X/Z)` evaluated at the given values of `X` and `Z`.
    pub fn eval_homogeneous(&self, n: usize, x: &C, z: &C) -> C {
        debug_assert!(self.degree().is_none_or(|d| d <= n));
        let mut acc = C::zero();
        let mut xp = C::one();
        for k in 0..=n {
            let c = self.coeff(k);
            if !c.is_zero() {
                acc = acc + &(c * &xp * &z.power((n - k) as u32));
            }
            xp = xp * x;
        }
        acc
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`, computed
    /// without division.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self, PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let lcd = d.coeffs[dd].clone();
        let Some(dn) = self.degree() else {
            return Ok(Self::zero());
        };
        if dn < dd {
            return Ok(self.clone());
        }
        let mut steps = dn - dd + 1;
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lcr = r.coeffs[dr].clone();
            r = r.scale(&lcd) - &d.scale(&lcr).shift(dr - dd);
            steps -= 1;
        }
        Ok(r.scale(&lcd.power(steps as u32)))
    }

    pub fn power(&self, exp: u32) -> Self {
        Ring::power(self, exp)
    }
}

impl<C: Field> UniPoly<C> {
    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let inv_lc = d.coeffs[dd].inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dn < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = rem[k + dd].clone() * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - &(c.clone() * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, PolyError> {
        self.div_rem(d).map(|(_, r)| r)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        C::poly_gcd(self, other)
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("r1 is nonzero");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0 - &(q.clone() * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0 - &(q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading_coeff().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.ext_gcd(m);
        if g.is_one() {
            Some(s.rem(m).expect("modulus is nonzero"))
        } else {
            None
        }
    }

    /// Interpolating polynomial through the given points (Newton form).
    pub fn interpolate(points: &[(C, C)]) -> Self {
        let n = points.len();
        let mut dd: Vec<C> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = dd[i].clone() - &dd[i - 1];
                let den = points[i].0.clone() - &points[i - level].0;
                dd[i] = num.div_by(&den).expect("distinct nodes");
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            acc = acc * &Self::linear_root(&points[i].0) + &Self::constant(dd[i].clone());
        }
        acc
    }
}

impl<C: ExactDiv> UniPoly<C> {
    /// Quotient `self / d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(dn) = self.degree() else {
            return Some(Self::zero());
        };
        if dn < dd {
            return None;
        }
        let lcd = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = rem[k + dd].exact_div(lcd)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - &(c.clone() * dc);
            }
            quot[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }
}

impl<C: Ring> Ring for UniPoly<C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
}

impl<C: ExactDiv> ExactDiv for UniPoly<C> {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d)
    }
}

impl<C: Ring> Zero for UniPoly<C> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for UniPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Default for UniPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_coeffs<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = o.clone() + s;
    }
    out
}

fn mul_coeffs<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + &(x.clone() * y);
        }
    }
    out
}

impl<'a, C: Ring> Add<&'a UniPoly<C>> for UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: &'a UniPoly<C>) -> UniPoly<C> {
        UniPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl<C: Ring> Add for UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: UniPoly<C>) -> UniPoly<C> {
        self + &rhs
    }
}

impl<'a, C: Ring> Sub<&'a UniPoly<C>> for UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: &'a UniPoly<C>) -> UniPoly<C> {
        let neg: Vec<C> = rhs.coeffs.iter().map(|c| -c.clone()).collect();
        UniPoly::new(add_coeffs(&self.coeffs, &neg))
    }
}

impl<C: Ring> Sub for UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: UniPoly<C>) -> UniPoly<C> {
        self - &rhs
    }
}

impl<'a, C: Ring> Mul<&'a UniPoly<C>> for UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: &'a UniPoly<C>) -> UniPoly<C> {
        UniPoly::new(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl<C: Ring> Mul for UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: UniPoly<C>) -> UniPoly<C> {
        self * &rhs
    }
}

impl<C: Ring> Neg for UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Ring + fmt::Display> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UniPoly").field(&self.coeffs).finish()
    }
}

/// `poly_divrem` over a field.
pub fn poly_divrem<C: Field>(f: &UniPoly<C>, g: &UniPoly<C>) -> Result<(UniPoly<C>, UniPoly<C>), PolyError> {
    f.div_rem(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{int, rat, Rational};

    type P = UniPoly<Rational>;

    #[test]
    fn divrem_trivial_cases() {
        let (q, r) = poly_divrem(&P::from_ints(&[-1, 0, 1]), &P::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, P::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = poly_divrem(&P::from_ints(&[0, 0, 0, 1]), &P::x()).unwrap();
        assert_eq!(q, P::from_ints(&[0, 0, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_by_zero_is_an_error() {
        assert_eq!(poly_divrem(&P::x(), &P::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let p = P::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(P::new(vec![int(0)]).degree(), None);
        assert_eq!(P::zero().degree_i(), -1);
    }

    #[test]
    fn gcd_and_inverse() {
        let a = P::from_ints(&[-1, 0, 1]); // (x-1)(x+1)
        let b = P::from_ints(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.gcd(&b), P::from_ints(&[1, 1]));
        let m = P::from_ints(&[1, 0, 1]);
        let inv = P::from_ints(&[1, 1]).inverse_mod(&m).unwrap();
        let prod = (inv * &P::from_ints(&[1, 1])).rem(&m).unwrap();
        assert!(prod.is_one());
    }

    #[test]
    fn exact_division_detects_remainders() {
        let f = P::from_ints(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&P::from_ints(&[1, 1])), Some(P::from_ints(&[-1, 1])));
        assert_eq!(f.div_exact(&P::from_ints(&[2, 1])), None);
    }

    #[test]
    fn exact_division_over_polynomial_coefficients() {
        // (y + x)(y - x) / (y - x) in Q[x][y]
        let x = P::x();
        let ypx = UniPoly::new(vec![x.clone(), P::one()]);
        let ymx = UniPoly::new(vec![-x, P::one()]);
        let prod = ypx.clone() * &ymx;
        assert_eq!(prod.div_exact(&ymx), Some(ypx));
    }

    #[test]
    fn compose_and_homogeneous_eval() {
        let p = P::from_ints(&[1, 2, 3]);
        let shifted = p.compose(&P::from_ints(&[1, 1]));
        assert_eq!(shifted, P::from_ints(&[6, 8, 3]));
        // Z^3 p(X/Z) at X=2, Z=3: 27 + 2*2*9 + 3*4*3 = 99
        assert_eq!(p.eval_homogeneous(3, &int(2), &int(3)), int(99));
    }

    #[test]
    fn pseudo_remainder_matches_scaled_remainder() {
        let f = P::from_ints(&[1, 2, 0, 5]);
        let g = P::from_ints(&[3, 0, 2]);
        let prem = f.pseudo_rem(&g).unwrap();
        let scaled = f.scale(&int(4)).rem(&g).unwrap();
        assert_eq!(prem, scaled);
    }

    #[test]
    fn interpolation_hits_the_points() {
        let pts = vec![(int(0), int(1)), (int(1), int(3)), (int(2), rat(7, 2))];
        let p = P::interpolate(&pts);
        for (x, y) in &pts {
            assert_eq!(&p.eval(x), y);
        }
    }

    #[test]
    fn even_odd_split_reassembles() {
        let p = P::from_ints(&[1, 2, 3, 4, 5, 6, 7, 8]);
        let (e, o) = p.even_odd_parts();
        let x2 = P::from_ints(&[0, 0, 1]);
        assert_eq!(e.compose(&x2) + &o.compose(&x2).shift(1), p);
    }
}
