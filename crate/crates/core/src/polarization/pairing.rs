use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::dihedral::D7Element;
use crate::exactcore::{bareiss_det, cyc_trace, CycNum, Field, Rational, Ring};

/// A vector of `K^2`.
pub type Vec2 = [CycNum; 2];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolarizationError {
    #[error("Gram entry ({0}, {1}) is not an integer")]
    NonIntegralEntry(usize, usize),
}

/// `v = w conj(w)` with `w = 1 - ζ`, `d+ = e^2 + 3e - 3` with `e = ζ + conj(ζ)`,
/// and `c = v^2 / d+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingConstants {
    pub w: CycNum,
    pub v: CycNum,
    pub dplus: CycNum,
    pub c: CycNum,
}

impl PairingConstants {
    pub fn new() -> Self {
        let z = CycNum::zeta();
        let w = CycNum::one() - &z;
        let v = w.clone() * &w.conj();
        let e = z.clone() + &z.conj();
        let dplus = e.clone() * &e + &(e * &CycNum::from_i64(3)) - &CycNum::from_i64(3);
        let c = v.clone() * &v * &dplus.inv().expect("d+ is nonzero");
        Self { w, v, dplus, c }
    }
}

impl Default for PairingConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// `(1/7) Tr(c (x1 conj(y2) - x2 conj(y1)))`
pub fn pairing(x: &Vec2, y: &Vec2) -> Rational {
    pairing_with(&PairingConstants::new(), x, y)
}

fn pairing_with(k: &PairingConstants, x: &Vec2, y: &Vec2) -> Rational {
    let inner = x[0].clone() * &y[1].conj() - &(x[1].clone() * &y[0].conj());
    cyc_trace(&(k.c.clone() * &inner)) / Rational::from_i64(7)
}

/// `{(ζ^k, 0)} ∪ {(0, w ζ^k)}` for `k = 0..5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    pub vectors: Vec<Vec2>,
}

pub fn lattice_basis() -> LatticeBasis {
    let w = PairingConstants::new().w;
    let mut vectors = Vec::with_capacity(12);
    for k in 0..6 {
        vectors.push([CycNum::zeta_pow(k), CycNum::zero()]);
    }
    for k in 0..6 {
        vectors.push([CycNum::zero(), w.clone() * &CycNum::zeta_pow(k)]);
    }
    LatticeBasis { vectors }
}

impl LatticeBasis {
    /// Coordinates of `x` in this basis (rational in general).
    pub fn coordinates(&self, x: &Vec2) -> Vec<Rational> {
        let winv = PairingConstants::new().w.inv().expect("nonzero");
        let second = x[1].clone() * &winv;
        x[0].coeffs().iter().chain(second.coeffs().iter()).cloned().collect()
    }
}

/// Integer matrix with `G[i][j] = <b_i, b_j>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    pub entries: Vec<Vec<BigInt>>,
}

impl GramForm {
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == -self.entries[j][i].clone()))
    }

    /// `M^T G M == G`
    pub fn is_invariant_under(&self, m: &[Vec<BigInt>]) -> bool {
        let n = self.entries.len();
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for a in 0..n {
                    if m[a][i].is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        acc += &m[a][i] * &self.entries[a][b] * &m[b][j];
                    }
                }
                if acc != self.entries[i][j] {
                    return false;
                }
            }
        }
        true
    }
}

pub fn gram(basis: &LatticeBasis) -> Result<GramForm, PolarizationError> {
    let k = PairingConstants::new();
    let n = basis.vectors.len();
    let mut entries = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let q = pairing_with(&k, &basis.vectors[i], &basis.vectors[j]);
            if !q.is_integer() {
                return Err(PolarizationError::NonIntegralEntry(i, j));
            }
            entries[i][j] = q.to_integer();
        }
    }
    Ok(GramForm { entries })
}

fn act(g: D7Element, x: &Vec2) -> Vec2 {
    let [a, b] = x.clone();
    let (a, b) = if g.refl { (a.conj(), b.conj()) } else { (a, b) };
    let z = CycNum::zeta_pow(g.rot as i64);
    [a * &z, b * &z]
}

/// Matrix of `g` on the basis (column `j` holds the image of `b_j`), or
/// `None` if some image leaves the lattice.
pub fn action_matrix(basis: &LatticeBasis, g: D7Element) -> Option<Vec<Vec<BigInt>>> {
    let n = basis.vectors.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (j, b) in basis.vectors.iter().enumerate() {
        for (i, c) in basis.coordinates(&act(g, b)).into_iter().enumerate() {
            if !c.is_integer() {
                return None;
            }
            m[i][j] = c.to_integer();
        }
    }
    Some(m)
}

pub fn integer_determinant(m: &[Vec<BigInt>]) -> BigInt {
    bareiss_det(m.to_vec())
}
