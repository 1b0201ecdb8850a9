/// A class of vectors `(0, a2, ..., a6)` over F7 up to scaling, stored with
/// its first nonzero entry equal to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoveringClass {
    pub representative: [u8; 6],
}

/// `a1 - a2 + a3 - a4 + a5 - a6 mod 7`
pub fn alternating_sum(a: &[u8; 6]) -> u8 {
    let s: i64 = a
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum();
    s.rem_euclid(7) as u8
}

/// The relation holds and at least two entries differ.
pub fn is_valid_covering(a: &[u8; 6]) -> bool {
    a.iter().all(|&x| x < 7) && alternating_sum(a) == 0 && a.iter().any(|&x| x != a[0])
}

fn inverse_mod7(x: u8) -> u8 {
    (1..7).find(|&y| (x as u32 * y as u32) % 7 == 1).expect("x is a unit")
}

fn normalize(a: [u8; 6]) -> [u8; 6] {
    let lead = *a.iter().find(|&&x| x != 0).expect("nonzero vector");
    let c = inverse_mod7(lead) as u32;
    a.map(|x| ((x as u32 * c) % 7) as u8)
}

/// All covering classes, in increasing order of representative.
pub fn enumerate_coverings() -> Vec<CoveringClass> {
    let mut out = Vec::new();
    for n in 1..7u32.pow(5) {
        let mut a = [0u8; 6];
        let mut m = n;
        for slot in a.iter_mut().skip(1).rev() {
            *slot = (m % 7) as u8;
            m /= 7;
        }
        if is_valid_covering(&a) && normalize(a) == a {
            out.push(CoveringClass { representative: a });
        }
    }
    out
}
