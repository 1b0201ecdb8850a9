use num_traits::{One, Zero};

use super::appendix_data::{Term, H_NUMERATOR, S6_COEFFS};
use super::CurveError;
use crate::diophantine::{hermite_s7, BetaParams};
use crate::exactcore::{Rational, Ring, UniPoly};

type P = UniPoly<Rational>;

/// Whether [`appendix_h`] divides by the common denominator `2 D^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    #[default]
    Exact,
    Numerator,
}

/// `(e1, e2, e3, e4)` of four values.
pub fn elementary_symmetric(u: &[Rational; 4]) -> [Rational; 4] {
    let mut e = [
        Rational::one(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    for x in u {
        for k in (1..5).rev() {
            e[k] = e[k].clone() + &(e[k - 1].clone() * x);
        }
    }
    [e[1].clone(), e[2].clone(), e[3].clone(), e[4].clone()]
}

/// `D = -αβγ + γ^2 + α^2 δ`
pub fn symmetric_denominator(sym: &[Rational; 4]) -> Rational {
    let [a, b, c, d] = sym;
    -(a.clone() * b * c) + &(c.clone() * c) + &(a.clone() * a * d)
}

fn eval_terms(terms: &[Term], sym: &[Rational; 4]) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, (coef, exps)| {
        let mut t = Rational::from_i64(*coef);
        for (v, &e) in sym.iter().zip(exps) {
            if e > 0 {
                t *= &v.power(e);
            }
        }
        acc + &t
    })
}

/// The general degree-7 polynomial `h(x)` at the symmetric values
/// `(α, β, γ, δ)`.
pub fn appendix_h(sym: &[Rational; 4], norm: Normalization) -> Result<P, CurveError> {
    let d = symmetric_denominator(sym);
    if d.is_zero() {
        return Err(CurveError::DegenerateSymmetricPoint);
    }
    let num = P::new(H_NUMERATOR.iter().map(|t| eval_terms(t, sym)).collect());
    Ok(match norm {
        Normalization::Numerator => num,
        Normalization::Exact => num.scale(&(Rational::one() / (Rational::from_i64(2) * &d.power(3)))),
    })
}

/// The transcribed sextic `S6(x) = Σ a_i x^i`.
pub fn appendix_s6(sym: &[Rational; 4]) -> P {
    P::new(S6_COEFFS.iter().map(|t| eval_terms(t, sym)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub u: [Rational; 4],
    pub sym: [Rational; 4],
    pub h: P,
    pub q4: P,
    pub s6: P,
    /// `(h^2 - x^7) / q4^2` when the division is exact.
    pub quotient: Option<P>,
    /// `quotient / S6` when constant.
    pub kappa: Option<Rational>,
    /// `kappa * 4 D^6`, i.e. the constant once `S6` is read over the
    /// denominator of `h^2`.
    pub kappa_normalized: Option<Rational>,
    /// `h / hermite_s7(u)` when constant.
    pub hermite_ratio: Option<Rational>,
    pub notes: Vec<String>,
}

impl AppendixReport {
    pub fn pass(&self) -> bool {
        self.quotient.as_ref().and_then(P::degree) == Some(6) && self.kappa.is_some() && self.hermite_ratio.is_some()
    }
}

fn constant_ratio(num: &P, den: &P) -> Option<Rational> {
    let k = (0..=den.degree()?).find(|&k| !den.coeff(k).is_zero())?;
    let r = num.coeff(k) / den.coeff(k);
    (den.scale(&r) == *num && !r.is_zero()).then_some(r)
}

/// Checks `h^2 - x^7 = κ S6 q4^2` and `h ∝ hermite_s7(u)` at one node tuple.
pub fn appendix_consistency(u: &[Rational; 4]) -> Result<AppendixReport, CurveError> {
    let params = BetaParams::new(u.clone());
    params.validate()?;
    let sym = elementary_symmetric(u);
    let h = appendix_h(&sym, Normalization::Exact)?;
    let q4 = params.q4();
    let s6 = appendix_s6(&sym);
    let mut notes = Vec::new();
    let lhs = h.power(2) - &P::monomial(Rational::one(), 7);
    let (quot, rem) = lhs.div_rem(&q4.power(2))?;
    let quotient = if rem.is_zero() {
        Some(quot)
    } else {
        notes.push("q4^2 does not divide h^2 - x^7".into());
        None
    };
    let kappa = quotient.as_ref().and_then(|q| constant_ratio(q, &s6));
    if quotient.is_some() && kappa.is_none() {
        notes.push("quotient is not proportional to S6".into());
    }
    let d = symmetric_denominator(&sym);
    let kappa_normalized = kappa.as_ref().map(|k| k.clone() * &Rational::from_i64(4) * &d.power(6));
    let hermite_ratio = constant_ratio(&h, &hermite_s7(&params)?);
    if hermite_ratio.is_none() {
        notes.push("h is not proportional to the Hermite interpolant".into());
    }
    Ok(AppendixReport {
        u: u.clone(),
        sym,
        h,
        q4,
        s6,
        quotient,
        kappa,
        kappa_normalized,
        hermite_ratio,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};

    fn ints(v: [i64; 4]) -> [Rational; 4] {
        v.map(int)
    }

    #[test]
    fn symmetric_functions() {
        assert_eq!(elementary_symmetric(&ints([1, 2, 3, 5])), ints([11, 41, 61, 30]));
    }

    #[test]
    fn degenerate_point() {
        assert_eq!(
            appendix_h(&ints([2, 1, 0, 0]), Normalization::Exact),
            Err(CurveError::DegenerateSymmetricPoint)
        );
    }

    #[test]
    fn h_is_the_hermite_interpolant() {
        let r = appendix_consistency(&ints([1, 2, 3, 5])).unwrap();
        assert!(r.pass(), "{:?}", r.notes);
        assert_eq!(r.h.degree(), Some(7));
        assert_eq!(r.hermite_ratio, Some(int(1)));
        assert_eq!(r.kappa_normalized, Some(int(1)));
        let r = appendix_consistency(&ints([1, 2, 3, 4])).unwrap();
        assert!(r.pass());
        assert_eq!(r.kappa_normalized, Some(int(1)));
    }

    #[test]
    fn fixture_symmetric_point() {
        let h = appendix_h(&ints([0, 1, 1, 0]), Normalization::Exact).unwrap();
        let shown = P::from_ints(&[0, 0, 1, -2, 0, 4, 3, 1]).scale(&rat(1, 2));
        assert_eq!(h, shown);
    }

    #[test]
    fn repeated_squares_rejected() {
        assert!(appendix_consistency(&ints([1, -1, 3, 4])).is_err());
    }
}
