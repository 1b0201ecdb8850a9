use num_traits::{One, Zero};
use thiserror::Error;

use super::group::{Class, D7Element, CLASS_SIZES, ORDER};
use crate::exactcore::{CycNum, Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("multiplicities {0:?} are not nonnegative integers")]
    NotACharacter(Vec<String>),
    #[error("character has {got} values but the subgroup has {expected} elements")]
    BadSubgroupCharacter { expected: usize, got: usize },
}

/// Irreducible representations in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irrep {
    Trivial,
    Alt,
    Chi(u8),
}

impl Irrep {
    pub const ALL: [Irrep; 5] = [Irrep::Trivial, Irrep::Alt, Irrep::Chi(1), Irrep::Chi(2), Irrep::Chi(3)];

    pub fn character(self) -> ClassFunction {
        match self {
            Irrep::Trivial => ClassFunction::from_ints([1, 1, 1, 1, 1]),
            Irrep::Alt => ClassFunction::from_ints([1, -1, 1, 1, 1]),
            Irrep::Chi(a) => {
                let mut v = [
                    CycNum::from_i64(2),
                    CycNum::zero(),
                    CycNum::zero(),
                    CycNum::zero(),
                    CycNum::zero(),
                ];
                for b in 1..=3i64 {
                    let k = a as i64 * b;
                    v[1 + b as usize] = CycNum::zeta_pow(k) + &CycNum::zeta_pow(-k);
                }
                ClassFunction::new(v)
            }
        }
    }
}

/// Values on the classes `[1], [t], [s], [s^2], [s^3]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: [CycNum; 5],
}

impl ClassFunction {
    pub fn new(values: [CycNum; 5]) -> Self {
        Self { values }
    }

    pub fn from_ints(v: [i64; 5]) -> Self {
        Self::new(v.map(CycNum::from_i64))
    }

    pub fn zero() -> Self {
        Self::from_ints([0; 5])
    }

    pub fn at(&self, g: D7Element) -> &CycNum {
        &self.values[g.class().index()]
    }

    pub fn dim(&self) -> &CycNum {
        &self.values[0]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.values[i].clone() + &other.values[i]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.values[i].clone() * &other.values[i]))
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = CycNum::from_i64(k);
        Self::new(std::array::from_fn(|i| self.values[i].clone() * &k))
    }

    /// `<f, g> = (1/14) Σ_g f(g) conj(h(g))`
    pub fn inner(&self, other: &Self) -> CycNum {
        let mut acc = CycNum::zero();
        for (i, size) in CLASS_SIZES.iter().enumerate() {
            acc = acc + &(self.values[i].clone() * &other.values[i].conj() * &CycNum::from_i64(*size as i64));
        }
        acc * &CycNum::from_i64(ORDER as i64).inv().expect("nonzero")
    }

    /// `g -> f(g^k)`
    pub fn power_map(&self, k: u32) -> Self {
        Self::new(std::array::from_fn(|i| {
            let g = Class::from_index(i).representative().pow(k);
            self.at(g).clone()
        }))
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(CycNum::is_real)
    }
}

/// Multiplicities of `1, alt, χ1, χ2, χ3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicities(pub [CycNum; 5]);

impl Multiplicities {
    pub fn rational(&self) -> Option<[Rational; 5]> {
        let v: Option<Vec<Rational>> = self.0.iter().map(CycNum::as_rational).collect();
        v.map(|v| v.try_into().expect("five entries"))
    }

    /// Integer multiplicities, if all are integral (possibly negative).
    pub fn integers(&self) -> Option<[i64; 5]> {
        let r = self.rational()?;
        let mut out = [0i64; 5];
        for (o, q) in out.iter_mut().zip(r.iter()) {
            if !q.is_integer() {
                return None;
            }
            *o = i64::try_from(q.to_integer()).ok()?;
        }
        Some(out)
    }

    /// Nonnegative integer multiplicities of a genuine representation.
    pub fn as_character(&self) -> Result<[i64; 5], RepError> {
        match self.integers() {
            Some(m) if m.iter().all(|&x| x >= 0) => Ok(m),
            _ => Err(RepError::NotACharacter(self.0.iter().map(|c| c.to_string()).collect())),
        }
    }

    /// `Σ m_i χ_i`
    pub fn reconstruct(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero();
        for (m, irr) in self.0.iter().zip(Irrep::ALL) {
            let chi = irr.character();
            acc = acc.add(&ClassFunction::new(std::array::from_fn(|i| chi.values[i].clone() * m)));
        }
        acc
    }
}

/// Rows are the irreducibles, columns the classes.
pub fn char_table() -> [[CycNum; 5]; 5] {
    Irrep::ALL.map(|irr| irr.character().values)
}

pub fn decompose(f: &ClassFunction) -> Multiplicities {
    Multiplicities(Irrep::ALL.map(|irr| f.inner(&irr.character())))
}

/// Character of `H^1` from the Lefschetz fixed point formula:
/// `h1(1) = 2g`, `h1(t) = 2 - fix(t)`, `h1(s^b) = 2 - fix(s)`.
pub fn lefschetz_h1(fix_t: i64, fix_s: i64, genus: i64) -> Result<[i64; 5], RepError> {
    let f = ClassFunction::from_ints([2 * genus, 2 - fix_t, 2 - fix_s, 2 - fix_s, 2 - fix_s]);
    decompose(&f).as_character()
}

/// Character of `Sym^n V` by `n χ_n(g) = Σ_{k=1..n} χ(g^k) χ_{n-k}(g)`.
pub fn sym_power_char(v: &ClassFunction, n: u32) -> ClassFunction {
    let powers: Vec<ClassFunction> = (0..=n).map(|k| v.power_map(k)).collect();
    let mut sym = vec![ClassFunction::from_ints([1; 5])];
    for m in 1..=n {
        let mut acc = ClassFunction::zero();
        for k in 1..=m {
            acc = acc.add(&powers[k as usize].mul(&sym[(m - k) as usize]));
        }
        let inv = CycNum::from_i64(m as i64).inv().expect("nonzero");
        sym.push(ClassFunction::new(std::array::from_fn(|i| {
            acc.values[i].clone() * &inv
        })));
    }
    sym.pop().expect("nonempty")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subgroup {
    Trivial,
    /// `<t>`
    Reflection,
    /// `<s>`
    Rotation,
}

impl Subgroup {
    pub fn elements(self) -> Vec<D7Element> {
        match self {
            Subgroup::Trivial => vec![D7Element::identity()],
            Subgroup::Reflection => vec![D7Element::identity(), D7Element::t()],
            Subgroup::Rotation => (0..7).map(D7Element::s_pow).collect(),
        }
    }
}

/// A character of a subgroup, listed on [`Subgroup::elements`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupCharacter {
    pub subgroup: Subgroup,
    pub values: Vec<CycNum>,
}

impl SubgroupCharacter {
    pub fn trivial(subgroup: Subgroup) -> Self {
        let n = subgroup.elements().len();
        Self {
            subgroup,
            values: vec![CycNum::one(); n],
        }
    }

    /// The sign character of `<t>`.
    pub fn sign() -> Self {
        Self {
            subgroup: Subgroup::Reflection,
            values: vec![CycNum::one(), -CycNum::one()],
        }
    }

    /// `s^k -> ζ^(a k)` on `<s>`.
    pub fn rotation(a: i64) -> Self {
        Self {
            subgroup: Subgroup::Rotation,
            values: (0..7).map(|k| CycNum::zeta_pow(a * k)).collect(),
        }
    }

    fn value(&self, g: D7Element) -> Option<&CycNum> {
        self.subgroup
            .elements()
            .iter()
            .position(|&h| h == g)
            .map(|i| &self.values[i])
    }

    /// Restriction of a class function to the subgroup.
    pub fn restrict(f: &ClassFunction, subgroup: Subgroup) -> Self {
        Self {
            subgroup,
            values: subgroup.elements().into_iter().map(|g| f.at(g).clone()).collect(),
        }
    }

    /// `(1/|H|) Σ_h a(h) conj(b(h))`
    pub fn inner(&self, other: &Self) -> CycNum {
        let mut acc = CycNum::zero();
        for (a, b) in self.values.iter().zip(&other.values) {
            acc = acc + &(a.clone() * &b.conj());
        }
        acc * &CycNum::from_i64(self.values.len() as i64).inv().expect("nonzero")
    }
}

/// `Ind(g) = (1/|H|) Σ_{x in G, x g x^-1 in H} χ(x g x^-1)`
pub fn induce(chi: &SubgroupCharacter) -> Result<ClassFunction, RepError> {
    let elems = chi.subgroup.elements();
    if chi.values.len() != elems.len() {
        return Err(RepError::BadSubgroupCharacter {
            expected: elems.len(),
            got: chi.values.len(),
        });
    }
    let inv_h = CycNum::from_i64(elems.len() as i64).inv().expect("nonzero");
    Ok(ClassFunction::new(std::array::from_fn(|i| {
        let g = Class::from_index(i).representative();
        let mut acc = CycNum::zero();
        for x in D7Element::all() {
            if let Some(v) = chi.value(x * g * x.inverse()) {
                acc = acc + v;
            }
        }
        acc * &inv_h
    })))
}
