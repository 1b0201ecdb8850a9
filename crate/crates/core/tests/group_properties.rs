#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use zeta7_core::dihedral::{
    act, decompose, induce, is_valid_covering, proj_eq, sym_power_char, ClassFunction, D7Element, Irrep, ProjPoint,
    Subgroup, SubgroupCharacter,
};
use zeta7_core::exactcore::{CycNum, ExactDiv, Rational, Ring};
use zeta7_core::polarization::{gram, integer_determinant, lattice_basis, pairing, smith_normal_form, Vec2};

fn element() -> impl Strategy<Value = D7Element> {
    (0i64..7, prop::bool::ANY).prop_map(|(r, f)| D7Element::new(r, f))
}

fn cyc() -> impl Strategy<Value = CycNum> {
    prop::array::uniform6(-5i64..=5).prop_map(CycNum::from_ints)
}

fn vec2() -> impl Strategy<Value = Vec2> {
    (cyc(), cyc()).prop_map(|(a, b)| [a, b])
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (cyc(), cyc(), cyc())
        .prop_filter("nonzero", |(a, b, c)| !(a.is_zero() && b.is_zero() && c.is_zero()))
        .prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #[test]
    fn group_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * a.inverse(), D7Element::identity());
        prop_assert_eq!(a.pow(a.order()), D7Element::identity());
        prop_assert_eq!((b * a * b.inverse()).class(), a.class());
    }

    #[test]
    fn action_is_a_left_action(g in element(), h in element(), p in point()) {
        prop_assert!(proj_eq(&act(g * h, &p), &act(g, &act(h, &p))));
    }

    #[test]
    fn decomposition_round_trips(m in prop::array::uniform5(0i64..6)) {
        let chi = Irrep::ALL
            .iter()
            .zip(m)
            .fold(ClassFunction::zero(), |acc, (irr, k)| acc.add(&irr.character().scale(k)));
        prop_assert_eq!(decompose(&chi).as_character().unwrap(), m);
        prop_assert_eq!(decompose(&chi).reconstruct(), chi);
    }

    #[test]
    fn symmetric_power_dimension(n in 0u32..16) {
        let v = Irrep::Alt.character().add(&Irrep::Chi(1).character());
        let expected = ((n + 1) * (n + 2) / 2) as i64;
        let chi = sym_power_char(&v, n);
        prop_assert_eq!(chi.dim(), &CycNum::from_i64(expected));
    }

    #[test]
    fn frobenius_reciprocity(a in 0i64..7, irr in 0usize..5) {
        let chi = SubgroupCharacter::rotation(a);
        let big = Irrep::ALL[irr].character();
        let lhs = induce(&chi).unwrap().inner(&big);
        let rhs = chi.inner(&SubgroupCharacter::restrict(&big, Subgroup::Rotation));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coverings_are_scale_invariant(v in prop::array::uniform6(0u8..7), k in 1u8..7) {
        prop_assert_eq!(is_valid_covering(&v), is_valid_covering(&v.map(|x| x * k % 7)));
    }

    #[test]
    fn pairing_is_alternating_and_bilinear(x in vec2(), y in vec2(), z in vec2(), k in -4i64..=4) {
        prop_assert!(pairing(&x, &x).is_zero());
        prop_assert_eq!(pairing(&x, &y), -pairing(&y, &x));
        let sum = [x[0].clone() + &z[0], x[1].clone() + &z[1]];
        prop_assert_eq!(pairing(&sum, &y), pairing(&x, &y) + pairing(&z, &y));
        let kq = Rational::from_integer(k.into());
        let scaled = [x[0].scale(&kq), x[1].scale(&kq)];
        prop_assert_eq!(pairing(&scaled, &y), kq * pairing(&x, &y));
    }

    #[test]
    fn pairing_is_invariant(x in vec2(), y in vec2(), k in 1i64..7) {
        let z = CycNum::zeta_pow(k);
        let rot = |v: &Vec2| [z.clone() * &v[0], z.clone() * &v[1]];
        let bar = |v: &Vec2| [v[0].conj(), v[1].conj()];
        prop_assert_eq!(pairing(&rot(&x), &rot(&y)), pairing(&x, &y));
        prop_assert_eq!(pairing(&bar(&x), &bar(&y)), pairing(&x, &y));
    }

    #[test]
    fn gram_computes_the_pairing(u in prop::collection::vec(-3i64..=3, 12), v in prop::collection::vec(-3i64..=3, 12)) {
        let basis = lattice_basis();
        let g = gram(&basis).unwrap();
        let combine = |c: &[i64]| {
            let mut acc = [CycNum::zero(), CycNum::zero()];
            for (b, k) in basis.vectors.iter().zip(c) {
                let k = Rational::from_integer((*k).into());
                acc = [acc[0].clone() + &b[0].scale(&k), acc[1].clone() + &b[1].scale(&k)];
            }
            acc
        };
        let mut expected = BigInt::zero();
        for i in 0..12 {
            for j in 0..12 {
                expected += BigInt::from(u[i]) * &g.entries[i][j] * BigInt::from(v[j]);
            }
        }
        prop_assert_eq!(pairing(&combine(&u), &combine(&v)), Rational::from_integer(expected));
    }

    #[test]
    fn smith_divisors_chain_and_multiply_to_det(m in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 4)) {
        let m: Vec<Vec<BigInt>> = m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let d = smith_normal_form(&m);
        for w in d.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(d.iter().all(|x| x.is_positive()));
        let det = integer_determinant(&m);
        let rational = Rational::determinant(
            m.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect(),
        );
        prop_assert_eq!(Rational::from_integer(det.clone()), rational);
        if det.is_zero() {
            prop_assert!(d.len() < 4);
        } else {
            prop_assert_eq!(d.len(), 4);
            prop_assert_eq!(d.iter().fold(BigInt::one(), |a, b| a * b), det.abs());
        }
    }
}
