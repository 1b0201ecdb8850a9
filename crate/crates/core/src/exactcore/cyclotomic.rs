//! The cyclotomic field Q(ζ) with ζ a primitive 7th root of unity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rational::{format_rational, int, Rational};
use super::ring::{ExactDiv, Field, Ring};

pub const DIM: usize = 6;

/// `c0 + c1 ζ + ... + c5 ζ^5`, reduced modulo `1 + ζ + ... + ζ^6`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    coeffs: [Rational; DIM],
}

impl CycNum {
    pub fn new(coeffs: [Rational; DIM]) -> Self {
        Self { coeffs }
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut c: [Rational; DIM] = Default::default();
        c[0] = q;
        Self { coeffs: c }
    }

    pub fn from_ints(ints: [i64; DIM]) -> Self {
        Self { coeffs: ints.map(int) }
    }

    pub fn coeffs(&self) -> &[Rational; DIM] {
        &self.coeffs
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        Self::from_power_coeffs(&{
            let mut v: [Rational; 7] = Default::default();
            v[k.rem_euclid(7) as usize] = int(1);
            v
        })
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// Reduces `Σ v[k] ζ^k` for `k < 7` to the canonical basis.
    pub fn from_power_coeffs(v: &[Rational; 7]) -> Self {
        let top = v[6].clone();
        let coeffs = std::array::from_fn(|k| v[k].clone() - &top);
        Self { coeffs }
    }

    /// Coefficients on `1, ζ, ..., ζ^6` with the last one zero.
    fn power_coeffs(&self) -> [Rational; 7] {
        std::array::from_fn(|k| {
            if k < DIM {
                self.coeffs[k].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Image under the automorphism `ζ -> ζ^k`, `k` prime to 7.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.rem_euclid(7) != 0, "ζ -> ζ^0 is not an automorphism");
        let mut v: [Rational; 7] = Default::default();
        for (j, c) in self.coeffs.iter().enumerate() {
            let idx = (j as i64 * k).rem_euclid(7) as usize;
            v[idx] = v[idx].clone() + c;
        }
        Self::from_power_coeffs(&v)
    }

    /// Complex conjugation `ζ -> ζ^6`.
    pub fn conj(&self) -> Self {
        self.galois(6)
    }

    /// Trace down to Q: `6 c0 - (c1 + ... + c5)`.
    pub fn trace(&self) -> Rational {
        let rest = self.coeffs[1..].iter().fold(Rational::zero(), |acc, c| acc + c);
        int(6) * &self.coeffs[0] - &rest
    }

    /// Product of the six conjugates.
    pub fn norm(&self) -> Rational {
        let mut acc = Self::one();
        for k in 1..7 {
            acc = acc * &self.galois(k);
        }
        acc.as_rational().expect("norm of a cyclotomic number is rational")
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coeffs[0].clone())
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Fixed by complex conjugation, i.e. lies in Q(ζ + ζ^-1).
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            coeffs: std::array::from_fn(|k| self.coeffs[k].clone() * q),
        }
    }

    fn to_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coeffs.to_vec())
    }

    fn cyclotomic_poly() -> UniPoly<Rational> {
        UniPoly::from_ints(&[1; 7])
    }
}

pub fn cyc_trace(x: &CycNum) -> Rational {
    x.trace()
}

pub fn cyc_conj(x: &CycNum) -> CycNum {
    x.conj()
}

impl Ring for CycNum {
    fn from_i64(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl Field for CycNum {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let inv = self.to_poly().inverse_mod(&Self::cyclotomic_poly())?;
        let mut c: [Rational; DIM] = Default::default();
        for (k, v) in inv.coeffs().iter().enumerate() {
            c[k] = v.clone();
        }
        Some(Self { coeffs: c })
    }
}

impl ExactDiv for CycNum {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_by(d)
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        Self {
            coeffs: Default::default(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::from_rational(int(1))
    }
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a CycNum> for CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'a CycNum) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|k| self.coeffs[k].clone() + &rhs.coeffs[k]),
        }
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        self + &rhs
    }
}

impl<'a> Sub<&'a CycNum> for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'a CycNum) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|k| self.coeffs[k].clone() - &rhs.coeffs[k]),
        }
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        self - &rhs
    }
}

impl<'a> Mul<&'a CycNum> for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'a CycNum) -> CycNum {
        let a = self.power_coeffs();
        let b = rhs.power_coeffs();
        let mut v: [Rational; 7] = Default::default();
        for (i, x) in a.iter().enumerate().take(DIM) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(DIM) {
                let k = (i + j) % 7;
                v[k] = v[k].clone() + &(x.clone() * y);
            }
        }
        CycNum::from_power_coeffs(&v)
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        self * &rhs
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})z", format_rational(c))?,
                _ => write!(f, "({})z^{k}", format_rational(c))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> CycNum {
        CycNum::zeta()
    }

    #[test]
    fn trace_examples() {
        assert_eq!(cyc_trace(&CycNum::one()), int(6));
        assert_eq!(cyc_trace(&z()), int(-1));
        assert_eq!(cyc_trace(&(z() + &z().conj())), int(-2));
    }

    #[test]
    fn conj_of_zeta_is_reduced_sixth_power() {
        assert_eq!(cyc_conj(&z()), CycNum::from_ints([-1, -1, -1, -1, -1, -1]));
    }

    #[test]
    fn norm_form_of_one_minus_zeta() {
        let w = CycNum::one() - &z();
        let v = w.conj() * &w;
        assert!(v.is_real());
        assert_eq!(cyc_trace(&v), int(14));
        assert_eq!(w.norm(), int(7));
    }

    #[test]
    fn zeta_has_order_seven() {
        assert!(z().power(7).is_one());
        assert!(!z().power(3).is_one());
        assert_eq!(CycNum::zeta_pow(-1), z().conj());
    }

    #[test]
    fn inverse_round_trips() {
        let x = CycNum::from_ints([2, -1, 0, 3, 0, 1]);
        let inv = x.inv().unwrap();
        assert!((x * &inv).is_one());
        assert!(CycNum::zero().inv().is_none());
    }

    #[test]
    fn galois_is_multiplicative() {
        let a = CycNum::from_ints([1, 2, 0, -1, 0, 0]);
        let b = CycNum::from_ints([0, 1, 1, 0, -3, 2]);
        for k in 1..7 {
            assert_eq!((a.clone() * &b).galois(k), a.galois(k) * &b.galois(k));
        }
    }
}
