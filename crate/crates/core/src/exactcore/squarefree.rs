//! Square-free decomposition (Yun's algorithm) over a field.

use num_traits::{One, Zero};

use super::poly::{PolyError, UniPoly};
use super::ring::Field;

/// Pairwise coprime monic square-free factors with multiplicities, so that
/// `f = lc(f) * Π factor^mult`. Constant factors are omitted.
pub fn squarefree_decompose<C: Field>(f: &UniPoly<C>) -> Result<Vec<(UniPoly<C>, u32)>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let f = f.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let (mut b, _) = f.div_rem(&a0)?;
    let (c, _) = df.div_rem(&a0)?;
    let mut d = c - &b.derivative();
    let mut mult = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), mult));
        }
        let (nb, _) = b.div_rem(&a)?;
        let (c, _) = d.div_rem(&a)?;
        d = c - &nb.derivative();
        b = nb;
        mult += 1;
    }
    Ok(out)
}

pub fn is_squarefree<C: Field>(f: &UniPoly<C>) -> bool {
    !f.is_zero() && f.gcd(&f.derivative()).is_constant()
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_part<C: Field>(f: &UniPoly<C>) -> Result<UniPoly<C>, PolyError> {
    Ok(squarefree_decompose(f)?
        .into_iter()
        .fold(UniPoly::one(), |acc, (p, _)| acc * &p))
}

/// Product of the factors occurring with multiplicity at least two, each
/// taken once (the radical of `gcd(f, f')`).
pub fn repeated_part<C: Field>(f: &UniPoly<C>) -> Result<UniPoly<C>, PolyError> {
    Ok(squarefree_decompose(f)?
        .into_iter()
        .filter(|(_, m)| *m >= 2)
        .fold(UniPoly::one(), |acc, (p, _)| acc * &p))
}

/// Writes `f = lc * q^2 * s` with `s` square-free: `q = Π p^(m/2)` and
/// `s = Π p^(m mod 2)`. Returns `(q, s)` with the leading coefficient
/// folded into `s`.
pub fn square_and_squarefree<C: Field>(f: &UniPoly<C>) -> Result<(UniPoly<C>, UniPoly<C>), PolyError> {
    let lc = f.leading_coeff().ok_or(PolyError::ZeroPolynomial)?.clone();
    let mut q = UniPoly::one();
    let mut s = UniPoly::constant(lc);
    for (p, m) in squarefree_decompose(f)? {
        q = q * &p.power(m / 2);
        if m % 2 == 1 {
            s = s * &p;
        }
    }
    Ok((q, s))
}

/// Reassembles `lc * Π p^m`.
pub fn reconstruct<C: Field>(lc: &C, factors: &[(UniPoly<C>, u32)]) -> UniPoly<C> {
    factors
        .iter()
        .fold(UniPoly::constant(lc.clone()), |acc, (p, m)| acc * &p.power(*m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{int, Rational};

    type P = UniPoly<Rational>;

    #[test]
    fn decomposes_known_product() {
        let f = P::from_ints(&[-1, 1]).power(2) * &P::from_ints(&[2, 1]);
        let d = squarefree_decompose(&f).unwrap();
        assert_eq!(d, vec![(P::from_ints(&[2, 1]), 1), (P::from_ints(&[-1, 1]), 2)]);
        assert_eq!(reconstruct(&int(1), &d), f);
    }

    #[test]
    fn squarefree_input_is_one_factor() {
        let f = P::from_ints(&[2, 0, 0, 3]);
        let d = squarefree_decompose(&f).unwrap();
        assert_eq!(d, vec![(f.monic(), 1)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(squarefree_decompose(&P::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn fixture_square_part_has_degree_four() {
        // h = (x^7 + 3x^6 + 4x^5 - 2x^3 + x^2) / 2
        let h = P::from_ints(&[0, 0, 1, -2, 0, 4, 3, 1]).scale(&crate::exactcore::rational::rat(1, 2));
        let f = h.power(2) - &P::monomial(int(1), 7);
        let q = repeated_part(&f).unwrap();
        assert_eq!(q.degree(), Some(4));
        let (qq, s) = square_and_squarefree(&f).unwrap();
        assert_eq!(qq.power(2) * &s, f);
    }
}
