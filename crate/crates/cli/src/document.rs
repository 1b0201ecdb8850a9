//! JSON form of a curve bundle. Rationals are `"num/den"` strings and
//! polynomials are coefficient arrays, lowest degree first.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use zeta7_core::curvefactory::CurveBundle;
use zeta7_core::exactcore::{format_rational, parse_rational, MultiPoly, ParseRationalError, Rational, UniPoly};

pub const SCHEMA_VERSION: &str = "1";

type P = UniPoly<Rational>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("unsupported schema version {0}")]
    Schema(String),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error(transparent)]
    Json(#[from] JsonError),
}

/// `serde_json::Error` is not comparable; keep its message.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct JsonError(String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// One term `coeff * T^a X^b Z^c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    pub exponents: [u32; 3],
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDocument {
    pub schema_version: String,
    pub params: Option<Vec<String>>,
    pub s7: Vec<String>,
    pub q4: Vec<String>,
    pub f6: Vec<String>,
    /// Coefficients in `w`, each a polynomial in `x`.
    pub genus3: Vec<Vec<String>>,
    #[serde(rename = "genus8_TXZ")]
    pub genus8_txz: Vec<TermDocument>,
    pub checks: Vec<CheckDocument>,
    pub kappa: Option<String>,
}

pub fn encode_poly(p: &P) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

pub fn decode_poly(v: &[String]) -> Result<P, DocumentError> {
    Ok(P::new(
        v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?,
    ))
}

fn encode_terms(f: &MultiPoly<Rational>) -> Vec<TermDocument> {
    f.terms()
        .map(|(e, c)| TermDocument {
            exponents: std::array::from_fn(|i| e.get(i).copied().unwrap_or(0)),
            coeff: format_rational(c),
        })
        .collect()
}

impl BundleDocument {
    pub fn from_bundle(b: &CurveBundle, kappa: Option<&Rational>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            params: b.params.as_ref().map(|p| p.beta.iter().map(format_rational).collect()),
            s7: encode_poly(&b.solver.s7),
            q4: encode_poly(&b.solver.q4),
            f6: encode_poly(&b.solver.f6),
            genus3: b.genus3.coeffs().iter().map(encode_poly).collect(),
            genus8_txz: encode_terms(&b.genus8_txz),
            checks: b
                .report
                .iter()
                .map(|c| CheckDocument {
                    name: c.name.clone(),
                    pass: c.pass,
                    detail: c.detail.clone(),
                })
                .collect(),
            kappa: kappa.map(format_rational),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn s7(&self) -> Result<P, DocumentError> {
        decode_poly(&self.s7)
    }

    pub fn q4(&self) -> Result<P, DocumentError> {
        decode_poly(&self.q4)
    }

    pub fn f6(&self) -> Result<P, DocumentError> {
        decode_poly(&self.f6)
    }

    pub fn genus3(&self) -> Result<UniPoly<P>, DocumentError> {
        Ok(UniPoly::new(
            self.genus3
                .iter()
                .map(|c| decode_poly(c))
                .collect::<Result<Vec<_>, _>>()?,
        ))
    }

    pub fn genus8_txz(&self) -> Result<MultiPoly<Rational>, DocumentError> {
        let terms = self
            .genus8_txz
            .iter()
            .map(|t| Ok((t.exponents.to_vec(), parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Ok(MultiPoly::from_terms(terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text).map_err(|e| JsonError(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Schema(doc.schema_version));
        }
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeta7_core::curvefactory::build_bundle;
    use zeta7_core::diophantine::BetaParams;
    use zeta7_core::exactcore::rat;

    #[test]
    fn polynomial_strings_are_lowest_degree_first() {
        let p = P::new(vec![rat(1, 2), rat(0, 1), rat(-3, 7)]);
        assert_eq!(encode_poly(&p), ["1/2", "0/1", "-3/7"]);
        assert_eq!(decode_poly(&encode_poly(&p)).unwrap(), p);
    }

    #[test]
    fn bundle_round_trips_losslessly() {
        let b = build_bundle(&BetaParams::from_ints([1, 2, 3, 5])).unwrap();
        let doc = BundleDocument::from_bundle(&b, Some(&rat(3, 4)));
        let back = BundleDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.s7().unwrap(), b.solver.s7);
        assert_eq!(back.f6().unwrap(), b.solver.f6);
        assert_eq!(back.q4().unwrap(), b.solver.q4);
        assert_eq!(back.genus3().unwrap(), b.genus3);
        assert_eq!(back.genus8_txz().unwrap(), b.genus8_txz);
        assert!(back.all_pass());
    }

    #[test]
    fn rejects_other_schema_versions() {
        let b = build_bundle(&BetaParams::from_ints([1, 2, 3, 5])).unwrap();
        let mut doc = BundleDocument::from_bundle(&b, None);
        doc.schema_version = "2".into();
        assert_eq!(
            BundleDocument::from_json(&doc.to_json()),
            Err(DocumentError::Schema("2".into()))
        );
    }
}
