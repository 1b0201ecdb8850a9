use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::UniPoly;

/// Commutative ring with exact arithmetic.
///
/// Binary operations take the right operand by reference so that big
/// coefficients are not cloned on every step.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn power(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    /// Monic gcd of two polynomials, by the Euclidean algorithm unless the
    /// field has something faster.
    fn poly_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn div_by(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self.clone() * &i)
    }
}

/// Ring with a division that succeeds exactly when the quotient exists.
///
/// Fraction-free elimination only ever divides by a known factor, so this is
/// all Bareiss needs from its entries.
pub trait ExactDiv: Ring {
    fn exact_div(&self, d: &Self) -> Option<Self>;

    /// Determinant of a square matrix; rings with a faster route override it.
    fn determinant(m: Vec<Vec<Self>>) -> Self {
        super::resultant::bareiss_det(m)
    }
}
