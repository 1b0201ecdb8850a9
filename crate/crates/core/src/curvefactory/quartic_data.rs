//! Quartic families of the appendix, with coefficients as ratios of
//! integer polynomials in the family parameter (lowest degree first).

use super::quartic::FamilyTerm;

pub(super) const FAMILY_S: &[FamilyTerm] = &[
    FamilyTerm {
        exps: [4, 0, 0],
        num: &[1],
        den: &[1],
    },
    FamilyTerm {
        exps: [3, 1, 0],
        num: &[0, 2, -2],
        den: &[1, 0, 0, 1],
    },
    FamilyTerm {
        exps: [3, 0, 1],
        num: &[8, -1, 6, 7, -4, 4, 0, -4],
        den: &[1, 0, 1, 1, 0, 1],
    },
    FamilyTerm {
        exps: [2, 2, 0],
        num: &[0, -1, 2, -1],
        den: &[1, 0, 1, 1, 0, 1],
    },
    FamilyTerm {
        exps: [2, 1, 1],
        num: &[2, 8, -10, -6, 6],
        den: &[1, 0, 0, 1],
    },
    FamilyTerm {
        exps: [2, 0, 2],
        num: &[25, -9, 15, 20, -24, 3, 6, -18, 0, 6],
        den: &[1, 0, 1, 1, 0, 1],
    },
    FamilyTerm {
        exps: [1, 3, 0],
        num: &[-1, 3, -5, 7, -6, 2],
        den: &[1, 0, 1, 2, 0, 2, 1, 0, 1],
    },
    FamilyTerm {
        exps: [1, 2, 1],
        num: &[2, -10, 14, -4, -4, 2],
        den: &[1, 0, 1, 1, 0, 1],
    },
    FamilyTerm {
        exps: [1, 1, 2],
        num: &[8, 8, -20, -16, 20, 6, -6],
        den: &[1, 0, 0, 1],
    },
    FamilyTerm {
        exps: [1, 0, 3],
        num: &[36, -24, 18, 34, -54, -5, 26, -27, -4, 20, 0, -4],
        den: &[1, 0, 1, 1, 0, 1],
    },
    FamilyTerm {
        exps: [0, 4, 0],
        num: &[1, -4, 6, -4, 1],
        den: &[1, 0, 1, 2, 0, 2, 1, 0, 1],
    },
    FamilyTerm {
        exps: [0, 3, 1],
        num: &[-2, 4, -1, -1, 1, -5, 6, -2],
        den: &[1, 0, 1, 2, 0, 2, 1, 0, 1],
    },
    FamilyTerm {
        exps: [0, 2, 2],
        num: &[5, -20, 25, -2, -23, 19, 5, -15, 5, 2, -1],
        den: &[1, 0, 1, 2, 0, 2, 1, 0, 1],
    },
    FamilyTerm {
        exps: [0, 1, 3],
        num: &[9, -5, 2, -10, 7, -9, 0, 8, -8, 6, 8, -8, -2, 2],
        den: &[1, 0, 1, 2, 0, 2, 1, 0, 1],
    },
    FamilyTerm {
        exps: [0, 0, 4],
        num: &[20, -20, 8, 28, -43, -9, 31, -14, -9, 17, 1, -7, 0, 1],
        den: &[1, 0, 1, 1, 0, 1],
    },
];

pub(super) const FAMILY_T: &[FamilyTerm] = &[
    FamilyTerm {
        exps: [4, 0, 0],
        num: &[1],
        den: &[1],
    },
    FamilyTerm {
        exps: [3, 0, 1],
        num: &[8, 8],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 1, 1],
        num: &[2],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 0, 2],
        num: &[25, 72, 72, 24],
        den: &[1, 1],
    },
    FamilyTerm {
        exps: [1, 3, 0],
        num: &[-1],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 2, 1],
        num: &[2],
        den: &[1, 1],
    },
    FamilyTerm {
        exps: [1, 1, 2],
        num: &[8, 8],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 0, 3],
        num: &[36, 96, 96, 32],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 4, 0],
        num: &[1],
        den: &[1, 1],
    },
    FamilyTerm {
        exps: [0, 3, 1],
        num: &[-2, -2],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 2, 2],
        num: &[5],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 1, 3],
        num: &[9, 24, 24, 8],
        den: &[1, 1],
    },
    FamilyTerm {
        exps: [0, 0, 4],
        num: &[20, 68, 96, 64, 16],
        den: &[1],
    },
];

pub(super) const FAMILY_U: &[FamilyTerm] = &[
    FamilyTerm {
        exps: [4, 0, 0],
        num: &[1],
        den: &[1],
    },
    FamilyTerm {
        exps: [3, 0, 1],
        num: &[8],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 1, 1],
        num: &[2, 2],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 0, 2],
        num: &[25, 2, 1],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 3, 0],
        num: &[-1, -1],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 2, 1],
        num: &[2, 4, 2],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 1, 2],
        num: &[8, 8],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 0, 3],
        num: &[36, 8, 4],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 4, 0],
        num: &[1, 2, 1],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 3, 1],
        num: &[-2, -2],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 2, 2],
        num: &[5, 10, 5],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 1, 3],
        num: &[9, 11, 3, 1],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 0, 4],
        num: &[20, 8, 4],
        den: &[1],
    },
];

pub(super) const FAMILY_V: &[FamilyTerm] = &[
    FamilyTerm {
        exps: [4, 0, 0],
        num: &[1],
        den: &[1],
    },
    FamilyTerm {
        exps: [3, 0, 1],
        num: &[8, 1],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 5, 1],
        num: &[-2, -4],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 2, 0],
        num: &[0, 1],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 1, 1],
        num: &[2],
        den: &[1],
    },
    FamilyTerm {
        exps: [2, 0, 2],
        num: &[25, 6],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 1, 2],
        num: &[8, -2],
        den: &[1],
    },
    FamilyTerm {
        exps: [1, 0, 3],
        num: &[36, 12],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 4, 0],
        num: &[1],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 3, 1],
        num: &[-2],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 2, 2],
        num: &[5, 4],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 1, 3],
        num: &[9, -4],
        den: &[1],
    },
    FamilyTerm {
        exps: [0, 0, 4],
        num: &[20, 9],
        den: &[1],
    },
];

pub(super) const BASE_QUARTIC: &[([u32; 3], i64)] = &[
    ([4, 0, 0], 1),
    ([3, 0, 1], 8),
    ([2, 1, 1], 2),
    ([2, 0, 2], 25),
    ([1, 3, 0], -1),
    ([1, 2, 1], 2),
    ([1, 1, 2], 8),
    ([1, 0, 3], 36),
    ([0, 4, 0], 1),
    ([0, 3, 1], -2),
    ([0, 2, 2], 5),
    ([0, 1, 3], 9),
    ([0, 0, 4], 20),
];
