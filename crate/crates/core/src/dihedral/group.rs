use std::ops::Mul;

pub const ORDER: usize = 14;

/// Sizes of the classes `[1], [t], [s], [s^2], [s^3]`.
pub const CLASS_SIZES: [u32; 5] = [1, 7, 2, 2, 2];

/// `s^rot * t^refl`, with `s^7 = t^2 = 1` and `t s = s^6 t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct D7Element {
    pub rot: u8,
    pub refl: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Identity,
    Reflection,
    Rotation(u8),
}

impl Class {
    pub fn index(self) -> usize {
        match self {
            Class::Identity => 0,
            Class::Reflection => 1,
            Class::Rotation(b) => 1 + b as usize,
        }
    }

    pub fn from_index(i: usize) -> Class {
        match i {
            0 => Class::Identity,
            1 => Class::Reflection,
            2..=4 => Class::Rotation((i - 1) as u8),
            _ => panic!("D7 has five classes"),
        }
    }

    /// A fixed element of the class.
    pub fn representative(self) -> D7Element {
        match self {
            Class::Identity => D7Element::identity(),
            Class::Reflection => D7Element::t(),
            Class::Rotation(b) => D7Element::s_pow(b as i64),
        }
    }
}

impl D7Element {
    pub fn new(rot: i64, refl: bool) -> Self {
        Self {
            rot: rot.rem_euclid(7) as u8,
            refl,
        }
    }

    pub fn identity() -> Self {
        Self::new(0, false)
    }

    pub fn s() -> Self {
        Self::new(1, false)
    }

    pub fn t() -> Self {
        Self::new(0, true)
    }

    pub fn s_pow(k: i64) -> Self {
        Self::new(k, false)
    }

    pub fn all() -> impl Iterator<Item = D7Element> {
        (0..14).map(|k| D7Element::new(k % 7, k >= 7))
    }

    pub fn inverse(self) -> Self {
        if self.refl {
            self
        } else {
            Self::new(-(self.rot as i64), false)
        }
    }

    pub fn pow(self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc * self)
    }

    pub fn order(self) -> u32 {
        (1..=14)
            .find(|&k| self.pow(k) == Self::identity())
            .expect("finite group")
    }

    pub fn class(self) -> Class {
        if self.refl {
            Class::Reflection
        } else if self.rot == 0 {
            Class::Identity
        } else {
            Class::Rotation(self.rot.min(7 - self.rot))
        }
    }
}

impl Mul for D7Element {
    type Output = D7Element;
    fn mul(self, rhs: D7Element) -> D7Element {
        let r = if self.refl { -(rhs.rot as i64) } else { rhs.rot as i64 };
        D7Element::new(self.rot as i64 + r, self.refl ^ rhs.refl)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_axioms_exhaustive() {
        let all: Vec<_> = D7Element::all().collect();
        assert_eq!(all.len(), ORDER);
        for &a in &all {
            assert_eq!(a * a.inverse(), D7Element::identity());
            for &b in &all {
                for &c in &all {
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
        let (s, t) = (D7Element::s(), D7Element::t());
        assert_eq!(t * s * t, s.pow(6));
        assert_eq!(s * t, t * s.pow(6));
        assert_eq!(s.order(), 7);
        assert_eq!(t.order(), 2);
    }

    #[test]
    fn class_sizes() {
        let mut counts = [0u32; 5];
        for g in D7Element::all() {
            counts[g.class().index()] += 1;
        }
        assert_eq!(counts, CLASS_SIZES);
        for g in D7Element::all() {
            for h in D7Element::all() {
                assert_eq!((h * g * h.inverse()).class(), g.class());
            }
        }
    }
}
