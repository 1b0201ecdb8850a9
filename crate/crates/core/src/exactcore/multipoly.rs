//! Sparse multivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::ring::{ExactDiv, Ring};

/// Exponent vector with trailing zeros removed, so that polynomials do not
/// need to agree on a variable count. Ordering is lexicographic with
/// variable 0 most significant.
pub type Exponent = Vec<u32>;

fn trim(mut e: Exponent) -> Exponent {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_add(a: &[u32], b: &[u32]) -> Exponent {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect()
}

fn exp_sub(a: &[u32], b: &[u32]) -> Option<Exponent> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out.push(x.checked_sub(y)?);
    }
    Some(trim(out))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Exponent, C>,
}

impl<C: Ring> MultiPoly<C> {
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, vec![])
    }

    pub fn monomial(c: C, exps: Exponent) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(C::one(), e)
    }

    pub fn add_term(&mut self, exps: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        let e = trim(exps);
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    /// Number of variables actually used.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var).copied().unwrap_or(0)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * s)))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn power(&self, exp: u32) -> Self {
        Ring::power(self, exp)
    }

    /// Evaluates at a point; missing coordinates are treated as zero.
    pub fn eval(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(C::zero);
                    t = t * &x.power(k);
                }
            }
            acc = acc + &t;
        }
        acc
    }

    /// Replaces variable `i` by `subs[i]`; variables past the end of `subs`
    /// are kept.
    pub fn substitute(&self, subs: &[MultiPoly<C>]) -> Self {
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            let mut kept = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    kept.push(0);
                    continue;
                }
                match subs.get(i) {
                    Some(s) => {
                        t = t * &s.power(k);
                        kept.push(0);
                    }
                    None => kept.push(k),
                }
            }
            acc = acc + &(t * &Self::monomial(C::one(), kept));
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(e, c)| {
            let k = e.get(var).copied().unwrap_or(0);
            if k == 0 {
                return None;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            Some((e2, C::from_i64(k as i64) * c))
        }))
    }

    /// Views the polynomial as univariate in `var` with coefficients in the
    /// remaining variables (which keep their indices).
    pub fn to_univariate(&self, var: usize) -> UniPoly<MultiPoly<C>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Self::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k = e.get(var).copied().unwrap_or(0) as usize;
            let mut e2 = e.clone();
            if var < e2.len() {
                e2[var] = 0;
            }
            coeffs[k].add_term(e2, c.clone());
        }
        UniPoly::new(coeffs)
    }

    pub fn from_univariate(p: &UniPoly<MultiPoly<C>>, var: usize) -> Self {
        let x = Self::var(var);
        let mut acc = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            acc = acc + &(c.clone() * &x.power(k as u32));
        }
        acc
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_uni(p: &UniPoly<C>, var: usize) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; var + 1];
            e[var] = k as u32;
            (e, c.clone())
        }))
    }

    /// Converts to a univariate polynomial when only `var` occurs.
    pub fn to_uni(&self, var: usize) -> Option<UniPoly<C>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![C::zero(); deg + 1];
        for (e, c) in &self.terms {
            for (i, &k) in e.iter().enumerate() {
                if i != var && k != 0 {
                    return None;
                }
            }
            coeffs[e.get(var).copied().unwrap_or(0) as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// Homogenizes to total degree `deg` using a new variable `hvar`.
    pub fn homogenize(&self, hvar: usize, deg: u32) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            let extra = deg.checked_sub(d)?;
            let mut e2 = e.clone();
            if e2.len() <= hvar {
                e2.resize(hvar + 1, 0);
            }
            e2[hvar] += extra;
            out.add_term(e2, c.clone());
        }
        Some(out)
    }
}

impl<C: ExactDiv> MultiPoly<C> {
    /// Exact quotient by lex leading-term division.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.leading_term()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading_term() {
            let e = exp_sub(re, &de)?;
            let c = rc.exact_div(&dc)?;
            let t = Self::monomial(c, e);
            rem = rem - &(t.clone() * d);
            quot = quot + &t;
        }
        Some(quot)
    }
}

impl<C: Ring> Ring for MultiPoly<C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
}

impl<C: ExactDiv> ExactDiv for MultiPoly<C> {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d)
    }
}

impl<C: Ring> Zero for MultiPoly<C> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for MultiPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, C: Ring> Add<&'a MultiPoly<C>> for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(mut self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
        self
    }
}

impl<C: Ring> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self + &rhs
    }
}

impl<'a, C: Ring> Sub<&'a MultiPoly<C>> for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(mut self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
        self
    }
}

impl<C: Ring> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self - &rhs
    }
}

impl<'a, C: Ring> Mul<&'a MultiPoly<C>> for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(exp_add(ea, eb), ca.clone() * cb);
            }
        }
        out
    }
}

impl<C: Ring> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self * &rhs
    }
}

impl<C: Ring> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: fmt::Debug> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}
