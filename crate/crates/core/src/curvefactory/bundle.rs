use num_traits::{One, Zero};

use super::descent::{genus2_condition, plane14_invariant, plane14_is_invariant, steps15_construct, transport_to_m};
use super::{CurveError, DescentParams, Transport};
use crate::diophantine::{cramer_s7, extract_f6, solve, validate, BetaParams, SolverOutput, ValidityReport};
use crate::exactcore::{discriminant_by_interpolation, format_rational, MultiPoly, Rational, Ring, UniPoly};

type P = UniPoly<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Everything produced by one construction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveBundle {
    /// Interpolation nodes; absent when built directly from a given `s7`.
    pub params: Option<BetaParams>,
    pub solver: SolverOutput,
    /// `F6`, the sextic of the genus-2 curve `y^2 = F6`.
    pub genus2: P,
    pub transport: Transport,
    pub descent: DescentParams,
    /// Degree-14 model in `x, y`.
    pub genus8_plane14: MultiPoly<Rational>,
    /// Model in `T, X, Z`.
    pub genus8_txz: MultiPoly<Rational>,
    /// `w^7 - 7x w^5 + 14x^2 w^3 - 7x^3 w - 2 s7(x)` as a polynomial in `w`.
    pub genus3: UniPoly<P>,
    pub report: Vec<CheckResult>,
}

impl CurveBundle {
    pub fn all_pass(&self) -> bool {
        self.report.iter().all(|c| c.pass)
    }

    pub fn is_generic(&self) -> bool {
        self.solver.is_generic()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.report.iter().find(|c| c.name == name)
    }
}

/// `w^7 - 7x w^5 + 14x^2 w^3 - 7x^3 w - 2 s7(x)`
pub fn genus3_model(s7: &P) -> UniPoly<P> {
    let x = P::x();
    let c = |k: i64| Rational::from_i64(k);
    UniPoly::new(vec![
        s7.scale(&c(-2)),
        x.power(3).scale(&c(-7)),
        P::zero(),
        x.power(2).scale(&c(14)),
        P::zero(),
        x.scale(&c(-7)),
        P::zero(),
        P::one(),
    ])
}

/// `T^7 - 7T^5 XZ + 14T^3 X^2Z^2 - 7T X^3Z^3 - 2 S7(X, Z)` in variables
/// `T, X, Z`.
pub fn genus8_txz_model(s7: &P) -> MultiPoly<Rational> {
    let (t, x, z) = (MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2));
    let xz = x * &z;
    let c = |k: i64| Rational::from_i64(k);
    let s7h = MultiPoly::from_terms(
        s7.coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| (vec![0, k as u32, 7 - k as u32], a.clone())),
    );
    t.power(7) - &(t.power(5) * &xz).scale(&c(7)) + &(t.power(3) * &xz.power(2)).scale(&c(14))
        - &(t * &xz.power(3)).scale(&c(7))
        - &s7h.scale(&c(2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantCheck {
    pub pass: bool,
    /// `disc_w(genus3) / (-2^6 7^7 (F6 q4^2)^3)` when it is a constant.
    pub ratio: Option<Rational>,
}

/// Compares `disc_w` of the genus-3 model with `-2^6 7^7 (F6 q4^2)^3`.
pub fn genus3_discriminant_check(b: &CurveBundle) -> DiscriminantCheck {
    let Ok(disc) = discriminant_by_interpolation(&b.genus3) else {
        return DiscriminantCheck {
            pass: false,
            ratio: None,
        };
    };
    let closed = (b.solver.f6.clone() * &b.solver.q4.power(2))
        .power(3)
        .scale(&(-Rational::from_i64(64) * &Rational::from_i64(7).power(7)));
    let ratio = match (disc.div_rem(&closed), closed.leading_coeff()) {
        (Ok((q, r)), Some(_)) if r.is_zero() && q.degree() == Some(0) => Some(q.coeff(0)),
        _ => None,
    };
    DiscriminantCheck {
        pass: ratio.is_some(),
        ratio,
    }
}

fn flag(name: &str, ok: bool) -> CheckResult {
    CheckResult::new(name, ok, if ok { "holds" } else { "fails" })
}

fn validity_checks(v: &ValidityReport) -> Vec<CheckResult> {
    vec![
        flag("f6_squarefree", v.f6_squarefree),
        flag("f6_disc_nonzero", v.f6_disc_nonzero),
        flag("gcd_condition", v.gcd_condition),
        flag("not_seventh_power", v.seventh_power_check),
    ]
}

/// Builds every model from `s7`, `q4` and records each check; never fails on
/// a check, only on malformed input.
pub fn assemble_bundle(params: Option<&BetaParams>, s7: &P, q4: &P) -> Result<CurveBundle, CurveError> {
    let f6 = extract_f6(s7, q4)?;
    let mut solver = SolverOutput {
        s7: s7.clone(),
        q4: q4.clone(),
        f6: f6.clone(),
        validity: ValidityReport::default(),
    };
    solver.validity = validate(&solver);
    let mut report = Vec::new();

    let residual = solver.identity_residual();
    report.push(flag("solver_identity", residual.is_zero()));
    if let Some(p) = params {
        let agree = cramer_s7(p).map(|c| c == *s7);
        report.push(CheckResult::new(
            "hermite_equals_cramer",
            agree == Ok(true),
            match agree {
                Ok(true) => "coefficientwise equal".to_string(),
                Ok(false) => "coefficients differ".to_string(),
                Err(e) => e.to_string(),
            },
        ));
    }
    report.extend(validity_checks(&solver.validity));

    let genus3 = genus3_model(s7);
    let genus8_txz = genus8_txz_model(s7);
    let restricted = genus8_txz.substitute(&[MultiPoly::var(0), MultiPoly::var(1), MultiPoly::one()]);
    let from_genus3 = MultiPoly::from_univariate(&genus3.map_coeffs(|c| MultiPoly::from_uni(c, 1)), 0);
    report.push(flag("genus8_restricts_to_genus3", restricted == from_genus3));

    let transport = transport_to_m(s7, &f6, q4);
    let descent = steps15_construct(&transport.a, &transport.tau)?;
    report.push(flag("descent_genus_zero", descent.genus_zero_residual().is_zero()));
    report.push(flag("descent_round_trip", descent.reassemble_tau() == transport.tau));
    let g2 = genus2_condition(&transport.tau, &transport.a);
    report.push(CheckResult::new(
        "genus2_condition",
        g2.is_ok(),
        match &g2 {
            Ok((q, s)) => format!("deg q = {}, deg s = {}", q.degree_i(), s.degree_i()),
            Err(e) => e.to_string(),
        },
    ));

    let genus8_plane14 = plane14_invariant(&descent.phi, &descent.psi)?;
    report.push(flag("plane14_invariant", plane14_is_invariant(&genus8_plane14)));

    let mut bundle = CurveBundle {
        params: params.cloned(),
        solver,
        genus2: f6,
        transport,
        descent,
        genus8_plane14,
        genus8_txz,
        genus3,
        report,
    };
    let dc = genus3_discriminant_check(&bundle);
    bundle.report.push(CheckResult::new(
        "genus3_discriminant",
        dc.pass,
        match &dc.ratio {
            Some(r) => format!("ratio {}", format_rational(r)),
            None => "not a constant multiple".to_string(),
        },
    ));
    Ok(bundle)
}

/// Solves for the nodes and assembles the bundle; any failing check is an
/// error.
pub fn build_bundle(p: &BetaParams) -> Result<CurveBundle, CurveError> {
    let out = solve(p)?;
    let bundle = assemble_bundle(Some(p), &out.s7, &out.q4)?;
    match bundle.report.iter().find(|c| !c.pass) {
        Some(c) => Err(CurveError::IdentityFailure(c.name.clone())),
        None => Ok(bundle),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::squarefree::repeated_part;
    use crate::exactcore::{int, rat};

    #[test]
    fn generic_bundle_passes() {
        let b = build_bundle(&BetaParams::from_ints([1, 2, 3, 5])).unwrap();
        assert!(b.all_pass());
        assert!(b.is_generic());
        assert_eq!(b.check("genus3_discriminant").unwrap().detail, "ratio 1/1");
        assert_eq!(b.genus8_plane14.total_degree(), Some(14));
    }

    #[test]
    fn collision_propagates() {
        assert!(matches!(
            build_bundle(&BetaParams::from_ints([1, 1, 3, 5])),
            Err(CurveError::Solver(_))
        ));
    }

    #[test]
    fn fixture_genus3_matches_display() {
        let h = P::from_ints(&[0, 0, 1, -2, 0, 4, 3, 1]).scale(&rat(1, 2));
        let q4 = repeated_part(&(h.power(2) - &P::monomial(int(1), 7))).unwrap();
        let b = assemble_bundle(None, &h, &q4).unwrap();
        // z^7 - 7x z^5 + 14x^2 z^3 - 7x^3 z - (x^7 + 3x^6 + 4x^5 - 2x^3 + x^2)
        let shown: UniPoly<P> = UniPoly::new(vec![
            P::from_ints(&[0, 0, -1, 2, 0, -4, -3, -1]),
            P::from_ints(&[0, 0, 0, -7]),
            P::zero(),
            P::from_ints(&[0, 0, 14]),
            P::zero(),
            P::from_ints(&[0, -7]),
            P::zero(),
            P::one(),
        ]);
        assert_eq!(b.genus3, shown);
        assert!(b.check("solver_identity").unwrap().pass);
        assert!(b.check("genus3_discriminant").unwrap().pass);
        assert!(!b.check("f6_squarefree").unwrap().pass);
    }
}
