use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::quartic_data::{BASE_QUARTIC, FAMILY_S, FAMILY_T, FAMILY_U, FAMILY_V};
use super::CurveError;
use crate::exactcore::{format_rational, MultiPoly, Rational, Ring, UniPoly};

/// One monomial `X^i Y^j Z^k` with coefficient `num(p) / den(p)`.
#[derive(Debug, Clone, Copy)]
pub struct FamilyTerm {
    pub exps: [u32; 3],
    pub num: &'static [i64],
    pub den: &'static [i64],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuarticFamily {
    Base,
    S,
    T,
    U,
    V,
}

impl QuarticFamily {
    pub const ALL: [QuarticFamily; 5] = [
        QuarticFamily::Base,
        QuarticFamily::S,
        QuarticFamily::T,
        QuarticFamily::U,
        QuarticFamily::V,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuarticFamily::Base => "BASE",
            QuarticFamily::S => "S",
            QuarticFamily::T => "T",
            QuarticFamily::U => "U",
            QuarticFamily::V => "V",
        }
    }

    fn terms(self) -> Option<&'static [FamilyTerm]> {
        match self {
            QuarticFamily::Base => None,
            QuarticFamily::S => Some(FAMILY_S),
            QuarticFamily::T => Some(FAMILY_T),
            QuarticFamily::U => Some(FAMILY_U),
            QuarticFamily::V => Some(FAMILY_V),
        }
    }
}

impl fmt::Display for QuarticFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuarticFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        QuarticFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown quartic family `{s}`"))
    }
}

/// A member of a family in the variables `X, Y, Z` (indices 0, 1, 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticFixture {
    pub family: QuarticFamily,
    pub param: Option<Rational>,
    pub poly: MultiPoly<Rational>,
}

impl QuarticFixture {
    pub fn base() -> Self {
        Self {
            family: QuarticFamily::Base,
            param: None,
            poly: MultiPoly::from_terms(BASE_QUARTIC.iter().map(|(e, c)| (e.to_vec(), Rational::from_i64(*c)))),
        }
    }

    pub fn label(&self) -> String {
        match &self.param {
            None => self.family.name().to_string(),
            Some(p) => format!("{}({})", self.family, format_rational(p)),
        }
    }
}

/// The family member at `param`; the parameter is ignored for `BASE`.
pub fn quartic_specialize(family: QuarticFamily, param: &Rational) -> Result<QuarticFixture, CurveError> {
    let Some(terms) = family.terms() else {
        return Ok(QuarticFixture::base());
    };
    let mut poly = MultiPoly::zero();
    for t in terms {
        let num = UniPoly::<Rational>::from_ints(t.num).eval(param);
        let den = UniPoly::<Rational>::from_ints(t.den).eval(param);
        if den.is_zero() {
            return Err(CurveError::ParameterPole {
                family: family.name(),
                param: format_rational(param),
            });
        }
        poly.add_term(t.exps.to_vec(), num / den);
    }
    Ok(QuarticFixture {
        family,
        param: Some(param.clone()),
        poly,
    })
}

/// Monomials where a quartic differs from the base quartic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticDiff {
    /// `(exponents, base coefficient, actual coefficient)`
    pub differences: Vec<(Vec<u32>, Rational, Rational)>,
}

impl QuarticDiff {
    pub fn matches(&self) -> bool {
        self.differences.is_empty()
    }
}

pub fn compare_with_base(q: &QuarticFixture) -> QuarticDiff {
    let base = QuarticFixture::base().poly;
    let diff = q.poly.clone() - &base;
    QuarticDiff {
        differences: diff
            .terms()
            .map(|(e, _)| (e.clone(), base.coeff(e), q.poly.coeff(e)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};

    #[test]
    fn families_at_zero_match_base() {
        for fam in [QuarticFamily::S, QuarticFamily::T, QuarticFamily::U] {
            let q = quartic_specialize(fam, &int(0)).unwrap();
            assert!(compare_with_base(&q).matches(), "{fam}");
            assert!(q.poly.is_homogeneous());
        }
    }

    #[test]
    fn v_family_differs_at_zero() {
        let q = quartic_specialize(QuarticFamily::V, &int(0)).unwrap();
        let diff = compare_with_base(&q);
        assert!(!diff.matches());
        assert!(!q.poly.is_homogeneous());
        let exps: Vec<_> = diff.differences.iter().map(|d| d.0.clone()).collect();
        assert!(exps.contains(&vec![2, 5, 1]));
    }

    #[test]
    fn poles_are_reported() {
        assert!(matches!(
            quartic_specialize(QuarticFamily::T, &int(-1)),
            Err(CurveError::ParameterPole { family: "T", .. })
        ));
        assert!(quartic_specialize(QuarticFamily::S, &int(-1)).is_err());
        assert!(quartic_specialize(QuarticFamily::S, &rat(1, 3)).is_ok());
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("v".parse::<QuarticFamily>(), Ok(QuarticFamily::V));
        assert!("W".parse::<QuarticFamily>().is_err());
    }
}
