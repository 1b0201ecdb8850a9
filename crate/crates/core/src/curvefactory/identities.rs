use num_traits::{One, Zero};

use crate::exactcore::{discriminant, CycNum, MultiPoly, Rational, Ring, UniPoly};

type MC = MultiPoly<CycNum>;
type MQ = MultiPoly<Rational>;

/// `Π_{i=0..6} (T - ζ^i W - ζ^-i Wbar)` in variables `T, W, Wbar`.
pub fn product_identity_lhs() -> MC {
    let (t, w, wb) = (MC::var(0), MC::var(1), MC::var(2));
    (0..7).fold(MC::one(), |acc, i| {
        let factor = t.clone() - &w.scale(&CycNum::zeta_pow(i)) - &wb.scale(&CycNum::zeta_pow(-i));
        acc * &factor
    })
}

/// `T^7 - 7 T^5 N + 14 T^3 N^2 - 7 T N^3 - (W^7 + Wbar^7)` with `N = W Wbar`.
pub fn product_identity_rhs() -> MC {
    let (t, w, wb) = (MC::var(0), MC::var(1), MC::var(2));
    let n = w.clone() * &wb;
    let c = |k: i64| CycNum::from_i64(k);
    t.power(7) - &(t.power(5) * &n).scale(&c(7)) + &(t.power(3) * &n.power(2)).scale(&c(14))
        - &(t * &n.power(3)).scale(&c(7))
        - &(w.power(7) + &wb.power(7))
}

pub fn verify_product_identity() -> bool {
    (product_identity_lhs() - &product_identity_rhs()).is_zero()
}

/// `(x - y)^7 + 7 xy (x - y) ((x - y)^2 + xy)^2 = x^7 - y^7`
pub fn verify_r_identity() -> bool {
    let (x, y) = (MQ::var(0), MQ::var(1));
    let r = x.clone() - &y;
    let w = x.clone() * &y;
    let lhs = r.power(7) + &(w.clone() * &r * &(r.power(2) + &w).power(2)).scale(&Rational::from_i64(7));
    (lhs - &(x.power(7) - &y.power(7))).is_zero()
}

/// `r^7 + 7 w r (r^2 + w)^2 - tau` as a polynomial in `r`.
pub fn r_model(w: &Rational, tau: &Rational) -> UniPoly<Rational> {
    let r = UniPoly::<Rational>::x();
    let inner = r.power(2) + &UniPoly::constant(w.clone());
    r.power(7) + &(r * &inner.power(2)).scale(&(Rational::from_i64(7) * w)) - &UniPoly::constant(tau.clone())
}

/// `disc_r(r_model) / (-7^7 (tau^2 + 4 w^7)^3)`, or `None` when the closed
/// form vanishes.
pub fn r_discriminant_ratio(w: &Rational, tau: &Rational) -> Option<Rational> {
    let d = discriminant(&r_model(w, tau)).ok()?;
    let base = tau.clone() * tau + &(Rational::from_i64(4) * &w.power(7));
    let closed = -Rational::from_i64(7).power(7) * &base.power(3);
    if closed.is_zero() {
        None
    } else {
        Some(d / closed)
    }
}
