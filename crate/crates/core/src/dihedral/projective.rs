use num_traits::Zero;

use super::group::{D7Element, ORDER};
use crate::exactcore::{CycNum, Ring};

/// Homogeneous coordinates `(z, x, y)`.
pub type ProjPoint = [CycNum; 3];

/// `s: (z, x, y) -> (z, ζx, ζ^-1 y)`, `t: (z, x, y) -> (-z, y, x)`;
/// `s^i t^j` acts as `t^j` followed by `s^i`.
pub fn act(g: D7Element, p: &ProjPoint) -> ProjPoint {
    let [z, x, y] = p.clone();
    let (z, x, y) = if g.refl { (-z, y, x) } else { (z, x, y) };
    let k = g.rot as i64;
    [z, x * &CycNum::zeta_pow(k), y * &CycNum::zeta_pow(-k)]
}

/// Equality in projective space: all 2x2 minors vanish.
pub fn proj_eq(a: &ProjPoint, b: &ProjPoint) -> bool {
    (0..3).all(|i| (i + 1..3).all(|j| (a[i].clone() * &b[j] - &(a[j].clone() * &b[i])).is_zero()))
}

pub fn orbit(p: &ProjPoint) -> Vec<ProjPoint> {
    let mut out: Vec<ProjPoint> = Vec::new();
    for g in D7Element::all() {
        let q = act(g, p);
        if !out.iter().any(|r| proj_eq(r, &q)) {
            out.push(q);
        }
    }
    out
}

pub fn stabilizer(p: &ProjPoint) -> Vec<D7Element> {
    D7Element::all().filter(|&g| proj_eq(&act(g, p), p)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRow {
    pub label: String,
    pub point: ProjPoint,
    pub stabilizer: Vec<D7Element>,
    pub orbit_size: usize,
}

impl OrbitRow {
    pub fn stabilizer_name(&self) -> &'static str {
        let s = &self.stabilizer;
        if s.len() == ORDER {
            "D7"
        } else if s.len() == 7 {
            "<s>"
        } else if s.len() == 2 && s.contains(&D7Element::t()) {
            "<t>"
        } else if s.len() == 2 {
            "<conjugate of t>"
        } else if s.len() == 1 {
            "1"
        } else {
            "other"
        }
    }
}

fn point(z: i64, x: i64, y: i64) -> ProjPoint {
    [CycNum::from_i64(z), CycNum::from_i64(x), CycNum::from_i64(y)]
}

/// Orbit data for the special points of the action on `P(alt + χ1)`.
pub fn projective_fixed_points() -> Vec<OrbitRow> {
    let pts = [
        ("(1,0,0)", point(1, 0, 0)),
        ("(0,1,0)", point(0, 1, 0)),
        ("(0,0,1)", point(0, 0, 1)),
        ("(1,1,-1)", point(1, 1, -1)),
        ("(1,2,-2)", point(1, 2, -2)),
        ("(0,1,1)", point(0, 1, 1)),
        ("(0,1,-1)", point(0, 1, -1)),
    ];
    pts.into_iter()
        .map(|(label, p)| OrbitRow {
            label: label.to_string(),
            stabilizer: stabilizer(&p),
            orbit_size: orbit(&p).len(),
            point: p,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::Field;

    #[test]
    fn orbit_table() {
        let rows = projective_fixed_points();
        let summary: Vec<(&str, &str, usize)> = rows
            .iter()
            .map(|r| (r.label.as_str(), r.stabilizer_name(), r.orbit_size))
            .collect();
        assert_eq!(
            summary,
            vec![
                ("(1,0,0)", "D7", 1),
                ("(0,1,0)", "<s>", 2),
                ("(0,0,1)", "<s>", 2),
                ("(1,1,-1)", "<t>", 7),
                ("(1,2,-2)", "<t>", 7),
                ("(0,1,1)", "<t>", 7),
                ("(0,1,-1)", "<t>", 7),
            ]
        );
        for r in &rows {
            assert_eq!(r.stabilizer.len() * r.orbit_size, ORDER);
        }
    }

    #[test]
    fn line_x_plus_y_is_fixed_by_t() {
        for (z, x) in [(1, 3), (0, 1), (2, -5)] {
            let p = point(z, x, -x);
            assert!(proj_eq(&act(D7Element::t(), &p), &p));
        }
    }

    #[test]
    fn conjugate_reflections_fix_rotated_points() {
        // s^a t s^-a fixes (1, ζ^a x, -ζ^-a x)
        for a in 1..7 {
            let g = D7Element::s_pow(a) * D7Element::t() * D7Element::s_pow(-a);
            let p = [
                CycNum::from_i64(1),
                CycNum::zeta_pow(a) * &CycNum::from_i64(3),
                -(CycNum::zeta_pow(-a) * &CycNum::from_i64(3)),
            ];
            assert!(proj_eq(&act(g, &p), &p));
        }
    }

    #[test]
    fn action_is_a_homomorphism() {
        let p = [
            CycNum::from_i64(2),
            CycNum::zeta(),
            CycNum::from_ints([1, 0, 3, 0, 0, -1]),
        ];
        for g in D7Element::all() {
            for h in D7Element::all() {
                assert!(proj_eq(&act(g * h, &p), &act(g, &act(h, &p))));
            }
        }
    }

    #[test]
    fn affine_chart_matches_projective_action() {
        // On x/z, y/z the projective t gives (x, y) -> (-y, -x).
        let (x, y) = (CycNum::from_i64(3), CycNum::from_ints([0, 2, 0, 0, 1, 0]));
        let p = [CycNum::from_i64(1), x.clone(), y.clone()];
        let q = act(D7Element::t(), &p);
        let zinv = q[0].inv().unwrap();
        assert_eq!(q[1].clone() * &zinv, -y.clone());
        assert_eq!(q[2].clone() * &zinv, -x.clone());
    }
}
