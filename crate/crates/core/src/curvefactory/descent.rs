use num_traits::{One, Zero};

use super::CurveError;
use crate::exactcore::squarefree::square_and_squarefree;
use crate::exactcore::{CycNum, MultiPoly, Rational, Ring, UniPoly};

type P = UniPoly<Rational>;

/// Data of the descent from the degree-14 plane model, with `L(w) = w - a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentParams {
    pub a: Rational,
    pub c: P,
    pub tau: P,
    pub psi: P,
    pub phi: P,
}

impl DescentParams {
    /// `(-psi(m^2 + a) + m C(m^2 + a)) / 2`
    pub fn reassemble_tau(&self) -> P {
        let shift = P::new(vec![self.a.clone(), Rational::zero(), Rational::one()]);
        let half = Rational::new(1.into(), 2.into());
        (self.c.compose(&shift).shift(1) - &self.psi.compose(&shift)).scale(&half)
    }

    /// `psi^2 - 4 (phi + 2 w^7) - (w - a) C^2`, which must vanish.
    pub fn genus_zero_residual(&self) -> P {
        let w7 = P::monomial(Rational::from_i64(2), 7);
        let l = P::linear_root(&self.a);
        self.psi.power(2) - &(self.phi.clone() + &w7).scale(&Rational::from_i64(4)) - &(l * &self.c.power(2))
    }

    pub fn invariants_hold(&self) -> bool {
        self.reassemble_tau() == self.tau && self.genus_zero_residual().is_zero()
    }
}

/// Splits `tau(m) = te(m^2) + m to(m^2)` and sets `C(w) = 2 to(w - a)`,
/// `psi(w) = -2 te(w - a)`, `phi(w) = (psi^2 - (w - a) C^2) / 4 - 2 w^7`.
pub fn steps15_construct(a: &Rational, tau: &P) -> Result<DescentParams, CurveError> {
    if a.is_zero() {
        return Err(CurveError::DegenerateL);
    }
    if tau.degree() != Some(7) {
        return Err(CurveError::DegreeViolation {
            what: "tau",
            expected: "7".into(),
            got: tau.degree_i(),
        });
    }
    let (te, to) = tau.even_odd_parts();
    let back = P::linear_root(a);
    let two = Rational::from_i64(2);
    let c = to.compose(&back).scale(&two);
    let psi = -te.compose(&back).scale(&two);
    let l = P::linear_root(a);
    let phi = (psi.power(2) - &(l * &c.power(2))).scale(&Rational::new(1.into(), 4.into())) - &P::monomial(two, 7);
    Ok(DescentParams {
        a: a.clone(),
        c,
        tau: tau.clone(),
        psi,
        phi,
    })
}

/// Writes `tau^2 + 4 (m^2 + a)^7 = q^2 s` and checks `deg q = 4`, `deg s = 6`.
pub fn genus2_condition(tau: &P, a: &Rational) -> Result<(P, P), CurveError> {
    if tau.degree() != Some(7) {
        return Err(CurveError::DegreeViolation {
            what: "tau",
            expected: "7".into(),
            got: tau.degree_i(),
        });
    }
    let shift = P::new(vec![a.clone(), Rational::zero(), Rational::one()]);
    let f = tau.power(2) + &shift.power(7).scale(&Rational::from_i64(4));
    let (q, s) = square_and_squarefree(&f)?;
    if q.degree() == Some(4) && s.degree() == Some(6) {
        Ok((q, s))
    } else {
        Err(CurveError::ShapeMismatch {
            square_degree: q.degree_i(),
            free_degree: s.degree_i(),
        })
    }
}

/// `x^14 + y^14 + phi(xy) + (x^7 - y^7) psi(xy)`
pub fn plane14_invariant(phi: &P, psi: &P) -> Result<MultiPoly<Rational>, CurveError> {
    if phi.degree_i() > 7 {
        return Err(CurveError::DegreeViolation {
            what: "phi",
            expected: "at most 7".into(),
            got: phi.degree_i(),
        });
    }
    if psi.degree_i() > 3 {
        return Err(CurveError::DegreeViolation {
            what: "psi",
            expected: "at most 3".into(),
            got: psi.degree_i(),
        });
    }
    let (x, y) = (MultiPoly::var(0), MultiPoly::var(1));
    let xy = MultiPoly::from_uni(&P::x(), 0).substitute(&[x.clone() * &y]);
    let phi_xy = MultiPoly::from_uni(phi, 0).substitute(std::slice::from_ref(&xy));
    let psi_xy = MultiPoly::from_uni(psi, 0).substitute(&[xy]);
    Ok(x.power(14) + &y.power(14) + &phi_xy + &((x.power(7) - &y.power(7)) * &psi_xy))
}

/// Fixed by `s: (x, y) -> (ζx, ζ^-1 y)` and `t: (x, y) -> (-y, -x)`.
pub fn plane14_is_invariant(f: &MultiPoly<Rational>) -> bool {
    let g = f.map_coeffs(|c| CycNum::from_rational(c.clone()));
    let (x, y) = (MultiPoly::<CycNum>::var(0), MultiPoly::<CycNum>::var(1));
    let s_img = g.substitute(&[x.scale(&CycNum::zeta()), y.scale(&CycNum::zeta_pow(-1))]);
    let t_img = g.substitute(&[-y, -x]);
    s_img == g && t_img == g
}

/// The central equation moved to the `m` line: `X = λ(1 - m)`,
/// `Z = (m + 1)/λ`, so that `XZ = -(m^2 + a)` with `a = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transport {
    pub a: Rational,
    pub lambda: Rational,
    /// `2 S7(X, Z)`
    pub tau: P,
    /// `F6(X, Z)`
    pub f6: P,
    /// `Q4(X, Z)`
    pub q4: P,
}

fn homogeneous_in_m(p: &P, deg: usize, x: &UniPoly<Rational>, z: &UniPoly<Rational>) -> P {
    let mut acc = P::zero();
    for k in 0..=deg {
        let c = p.coeff(k);
        if !c.is_zero() {
            acc = acc + &(x.power(k as u32) * &z.power((deg - k) as u32)).scale(&c);
        }
    }
    acc
}

/// Chooses the smallest positive integer λ keeping all degrees (no root of
/// `s7 F6 Q4` at `X/Z = -λ^2`) and substitutes.
pub fn transport_to_m(s7: &P, f6: &P, q4: &P) -> Transport {
    let a = Rational::from_i64(-1);
    let lambda = (1..)
        .map(Rational::from_i64)
        .find(|l| {
            let pt = -(l.clone() * l);
            !s7.eval(&pt).is_zero() && !f6.eval(&pt).is_zero() && !q4.eval(&pt).is_zero()
        })
        .expect("finitely many bad values");
    let linv = Rational::one() / &lambda;
    let x = P::new(vec![lambda.clone(), -lambda.clone()]);
    let z = P::new(vec![linv.clone(), linv]);
    Transport {
        tau: homogeneous_in_m(s7, 7, &x, &z).scale(&Rational::from_i64(2)),
        f6: homogeneous_in_m(f6, 6, &x, &z),
        q4: homogeneous_in_m(q4, 4, &x, &z),
        a,
        lambda,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diophantine::{solve, BetaParams};
    use crate::exactcore::int;

    #[test]
    fn monomial_tau() {
        let tau = P::monomial(int(1), 7);
        let d = steps15_construct(&int(1), &tau).unwrap();
        assert!(d.psi.is_zero());
        assert_eq!(d.c, P::from_ints(&[-1, 1]).power(3).scale(&int(2)));
        assert!(d.invariants_hold());
    }

    #[test]
    fn construct_preconditions() {
        let tau = P::monomial(int(1), 7);
        assert_eq!(steps15_construct(&int(0), &tau), Err(CurveError::DegenerateL));
        assert!(matches!(
            steps15_construct(&int(1), &P::monomial(int(1), 6)),
            Err(CurveError::DegreeViolation { .. })
        ));
    }

    #[test]
    fn monomial_tau_fails_genus2_shape() {
        let r = genus2_condition(&P::monomial(int(1), 7), &int(1));
        assert!(matches!(r, Err(CurveError::ShapeMismatch { .. })));
    }

    #[test]
    fn transported_solution_satisfies_genus2_shape() {
        let out = solve(&BetaParams::from_ints([1, 2, 3, 5])).unwrap();
        let tr = transport_to_m(&out.s7, &out.f6, &out.q4);
        assert_eq!(tr.tau.degree(), Some(7));
        let (q, s) = genus2_condition(&tr.tau, &tr.a).unwrap();
        let shift = P::new(vec![tr.a.clone(), int(0), int(1)]);
        let lhs = tr.tau.power(2) + &shift.power(7).scale(&int(4));
        assert_eq!(q.power(2) * &s, lhs);
        assert_eq!(lhs, (tr.f6.clone() * &tr.q4.power(2)).scale(&int(4)));
        // tau and -tau give the same verdict
        assert!(genus2_condition(&tr.tau.scale(&int(-1)), &tr.a).is_ok());
    }

    #[test]
    fn plane14_examples() {
        let f = plane14_invariant(&P::monomial(int(1), 7), &P::zero()).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.coeff(&[7, 7]), int(1));
        assert!(plane14_is_invariant(&f));
        let g = plane14_invariant(&P::from_ints(&[3, -1, 0, 2, 0, 0, 5, 1]), &P::from_ints(&[1, 0, -2, 4])).unwrap();
        assert!(plane14_is_invariant(&g));
        assert!(plane14_invariant(&P::monomial(int(1), 8), &P::zero()).is_err());
        let broken = g + &MultiPoly::var(0);
        assert!(!plane14_is_invariant(&broken));
    }
}
