//! Deciding whether a plane curve `F(X, Y, Z) = 0` is smooth, by elimination
//! and dynamic evaluation over `Q[x]/(m)`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::quartic::QuarticFixture;
use crate::exactcore::squarefree::squarefree_part;
use crate::exactcore::{bareiss_det, resultant, MultiPoly, Rational, Ring, UniPoly};

type P = UniPoly<Rational>;
/// Polynomial in `y` with coefficients in `Q[x]`.
type Bi = UniPoly<P>;

const RETRIES: usize = 5;
const SEED: u64 = 0x7a65_7461_0007;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    Singular,
    /// Every elimination degenerated within the retry budget.
    Inconclusive,
}

pub fn quartic_smoothness(q: &QuarticFixture) -> bool {
    smoothness(&q.poly) == Smoothness::Smooth
}

/// Whether the homogeneous `f` in `X, Y, Z` defines a smooth projective curve.
pub fn smoothness(f: &MultiPoly<Rational>) -> Smoothness {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for attempt in 0..=RETRIES {
        let g = if attempt == 0 {
            f.clone()
        } else {
            f.substitute(&random_change(&mut rng))
        };
        match has_singular_point(&g, &mut rng) {
            Some(true) => return Smoothness::Singular,
            Some(false) => return Smoothness::Smooth,
            None => continue,
        }
    }
    Smoothness::Inconclusive
}

fn random_change(rng: &mut ChaCha8Rng) -> Vec<MultiPoly<Rational>> {
    loop {
        let m: Vec<Vec<Rational>> = (0..3)
            .map(|_| (0..3).map(|_| Rational::from_i64(rng.gen_range(-3..=3))).collect())
            .collect();
        if bareiss_det(m.clone()).is_zero() {
            continue;
        }
        return m
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(MultiPoly::zero(), |acc, (j, c)| acc + &MultiPoly::var(j).scale(c))
            })
            .collect();
    }
}

/// `Some(true)` if the partials have a common projective zero, `None` if the
/// elimination degenerated.
fn has_singular_point(f: &MultiPoly<Rational>, rng: &mut ChaCha8Rng) -> Option<bool> {
    let grads: Vec<MultiPoly<Rational>> = (0..3).map(|i| f.partial(i)).collect();
    if grads.iter().all(Zero::is_zero) {
        return Some(true);
    }
    let (x, y) = (MultiPoly::var(0), MultiPoly::var(1));
    let one = MultiPoly::one();

    // the line Z = 0
    let on_line: Vec<_> = grads
        .iter()
        .map(|g| g.substitute(&[x.clone(), y.clone(), MultiPoly::zero()]))
        .collect();
    if on_line.iter().all(Zero::is_zero) {
        return Some(true);
    }
    let origin = [Rational::one(), Rational::zero(), Rational::zero()];
    if grads.iter().all(|g| g.eval(&origin).is_zero()) {
        return Some(true);
    }
    let line_gcd = on_line.iter().fold(P::zero(), |acc, g| {
        let u = g
            .substitute(&[x.clone(), one.clone()])
            .to_uni(0)
            .expect("only X remains");
        acc.gcd(&u)
    });
    if !line_gcd.is_constant() {
        return Some(true);
    }

    // the chart Z = 1
    let chart: Vec<Bi> = grads
        .iter()
        .map(|g| to_bivariate(&g.substitute(&[x.clone(), y.clone(), one.clone()])))
        .collect();
    if chart.iter().all(Zero::is_zero) {
        return Some(true);
    }
    let common = chart.iter().fold(Bi::zero(), |acc, g| bivariate_gcd(&acc, g));
    if common.degree_i() > 0 || common.coeff(0).degree_i() > 0 {
        return Some(true);
    }
    let mut combo = || {
        chart.iter().fold(Bi::zero(), |acc, g| {
            acc + &g.scale(&P::constant(Rational::from_i64(rng.gen_range(1..=9))))
        })
    };
    let (h1, h2) = (combo(), combo());
    let r = match (h1.degree(), h2.degree()) {
        (None, _) | (_, None) => return None,
        (Some(0), _) => h1.coeff(0),
        (_, Some(0)) => h2.coeff(0),
        _ => resultant(&h1, &h2).ok()?,
    };
    if r.is_zero() {
        return None;
    }
    if r.is_constant() {
        return Some(false);
    }
    let m = squarefree_part(&r).ok()?;
    let mut comps = vec![(m, Bi::zero())];
    for g in &chart {
        comps = comps
            .into_iter()
            .flat_map(|(m, acc)| d5_gcd(m, acc, g.clone()))
            .collect();
    }
    Some(comps.iter().any(|(_, g)| g.degree_i() != 0))
}

/// `f(x, y)` with `x` as variable 0 and `y` as variable 1.
fn to_bivariate(f: &MultiPoly<Rational>) -> Bi {
    f.to_univariate(1)
        .map_coeffs(|c| c.to_uni(0).expect("only x remains in the coefficients"))
}

fn content(p: &Bi) -> P {
    p.coeffs().iter().fold(P::zero(), |acc, c| acc.gcd(c))
}

fn primitive(p: &Bi) -> Bi {
    let c = content(p);
    if c.is_zero() {
        return p.clone();
    }
    p.map_coeffs(|x| x.div_rem(&c).expect("content is nonzero").0)
}

/// Greatest common divisor in `Q[x][y]` by the primitive remainder sequence.
pub(crate) fn bivariate_gcd(a: &Bi, b: &Bi) -> Bi {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let c = content(a).gcd(&content(b));
    let (mut p, mut q) = (primitive(a), primitive(b));
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = p.pseudo_rem(&q).expect("q is nonzero");
        p = q;
        q = if r.is_zero() { r } else { primitive(&r) };
    }
    let g = primitive(&p);
    let g = if g.degree() == Some(0) { Bi::one() } else { g };
    let g = g.scale(&c);
    let unit = g.leading_coeff().and_then(|l| l.leading_coeff()).cloned();
    match unit {
        Some(u) => g.scale(&P::constant(Rational::one() / u)),
        None => g,
    }
}

fn reduce(p: &Bi, m: &P) -> Bi {
    p.map_coeffs(|c| c.rem(m).expect("modulus is nonzero"))
}

/// gcd over `Q[x]/(m)` for square-free `m`, splitting `m` whenever a leading
/// coefficient is a zero divisor. Each returned gcd has a leading
/// coefficient invertible modulo its component.
fn d5_gcd(m: P, a: Bi, b: Bi) -> Vec<(P, Bi)> {
    if m.is_constant() {
        return Vec::new();
    }
    let a = reduce(&a, &m);
    let b = reduce(&b, &m);
    if b.is_zero() {
        return split_leading(m, a);
    }
    let lc = b.leading_coeff().expect("b is nonzero").clone();
    let g = lc.gcd(&m);
    if !g.is_constant() {
        let (rest, _) = m.div_rem(&g).expect("g is nonzero");
        let mut out = d5_gcd(g, a.clone(), b.clone());
        out.extend(d5_gcd(rest, a, b));
        return out;
    }
    let inv = lc.inverse_mod(&m).expect("lc is a unit");
    let db = b.degree().expect("b is nonzero");
    let mut r = a;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let c = (r.leading_coeff().expect("nonzero").clone() * &inv)
            .rem(&m)
            .expect("m is nonzero");
        r = reduce(&(r - &b.scale(&c).shift(dr - db)), &m);
    }
    d5_gcd(m, b, r)
}

fn split_leading(m: P, a: Bi) -> Vec<(P, Bi)> {
    let Some(lc) = a.leading_coeff() else {
        return vec![(m, a)];
    };
    let g = lc.gcd(&m);
    if g.is_constant() {
        return vec![(m, a)];
    }
    let (rest, _) = m.div_rem(&g).expect("g is nonzero");
    let mut out = Vec::new();
    if !g.is_constant() {
        let lowered = reduce(&a, &g);
        out.extend(split_leading(g, lowered));
    }
    if !rest.is_constant() {
        out.push((rest, a));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvefactory::quartic::{quartic_specialize, QuarticFamily};
    use crate::exactcore::int;

    fn xyz() -> (MultiPoly<Rational>, MultiPoly<Rational>, MultiPoly<Rational>) {
        (MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2))
    }

    #[test]
    fn base_and_family_members_are_smooth() {
        assert!(quartic_smoothness(&QuarticFixture::base()));
        for (fam, p) in [(QuarticFamily::S, 2), (QuarticFamily::T, 1), (QuarticFamily::U, 1)] {
            assert!(quartic_smoothness(&quartic_specialize(fam, &int(p)).unwrap()), "{fam}");
        }
    }

    #[test]
    fn quadruple_line_is_singular() {
        let (x, _, _) = xyz();
        assert_eq!(smoothness(&x.power(4)), Smoothness::Singular);
    }

    #[test]
    fn fermat_quartic_is_smooth() {
        let (x, y, z) = xyz();
        assert_eq!(
            smoothness(&(x.power(4) + &y.power(4) + &z.power(4))),
            Smoothness::Smooth
        );
    }

    #[test]
    fn nodal_quartics_are_singular() {
        let (x, y, z) = xyz();
        // node at (0:0:1)
        let f = x.power(4) + &y.power(4) + &(x.clone() * &y * &z.power(2));
        assert_eq!(smoothness(&f), Smoothness::Singular);
        // node at an irrational point: product of two conics meeting at x^2 = 2
        let c1 = x.power(2) + &y.power(2) - &z.power(2).scale(&int(3));
        let c2 = y.power(2) - &z.power(2);
        assert_eq!(smoothness(&(c1 * &c2)), Smoothness::Singular);
    }

    #[test]
    fn singular_point_at_infinity() {
        let (x, y, z) = xyz();
        // cusp-like singularity at (0:1:0)
        let f = x.power(4) + &(x.clone() * &z.power(3)) + &(z.power(2) * &y.power(2)) - &(x.power(2) * &z.clone() * &y);
        let f = f.clone() + &z.power(4);
        let s = smoothness(&f);
        assert_eq!(s, Smoothness::Singular);
    }

    #[test]
    fn bivariate_gcd_finds_common_factor() {
        let x = P::x();
        let a: Bi = UniPoly::new(vec![x.clone(), P::one()]); // y + x
        let b: Bi = UniPoly::new(vec![P::from_ints(&[1, 0, 1]), P::zero(), P::one()]); // y^2 + x^2 + 1
        let g = bivariate_gcd(&(a.clone() * &b), &(a.clone() * &a));
        assert_eq!(g, a);
        assert_eq!(bivariate_gcd(&a, &b), Bi::one());
    }
}
