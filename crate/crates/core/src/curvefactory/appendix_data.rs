//! Transcribed closed forms of the appendix in the elementary symmetric
//! functions `(α, β, γ, δ)` of the nodes.

/// `(coefficient, [exponent of α, β, γ, δ])`
pub(super) type Term = (i64, [u32; 4]);

// Numerator of h(x); the coefficient of x^k is the k-th table.
const H_X0: &[Term] = &[
    (1, [0, 0, 3, 4]),
    (-3, [2, 0, 1, 5]),
    (1, [3, 0, 2, 4]),
    (1, [3, 1, 0, 5]),
];
const H_X1: &[Term] = &[
    (-2, [0, 0, 5, 2]),
    (4, [0, 1, 3, 3]),
    (-3, [1, 0, 2, 4]),
    (6, [2, 0, 3, 3]),
    (-9, [2, 1, 1, 4]),
    (1, [3, 0, 0, 5]),
    (-2, [3, 0, 4, 2]),
    (2, [3, 1, 2, 3]),
    (3, [3, 2, 0, 4]),
    (-1, [4, 0, 1, 4]),
];
const H_X2: &[Term] = &[
    (3, [0, 0, 3, 3]),
    (1, [0, 0, 7, 0]),
    (-4, [0, 1, 5, 1]),
    (6, [0, 2, 3, 2]),
    (2, [1, 0, 4, 2]),
    (-9, [1, 1, 2, 3]),
    (-9, [2, 0, 1, 4]),
    (-3, [2, 0, 5, 1]),
    (6, [2, 1, 3, 2]),
    (-9, [2, 2, 1, 3]),
    (14, [3, 0, 2, 3]),
    (1, [3, 0, 6, 0]),
    (6, [3, 1, 0, 4]),
    (-3, [3, 1, 4, 1]),
    (4, [3, 2, 2, 2]),
    (3, [3, 3, 0, 3]),
    (-2, [4, 0, 3, 2]),
    (-8, [4, 1, 1, 3]),
    (1, [5, 0, 0, 4]),
];
const H_X3: &[Term] = &[
    (-1, [0, 0, 5, 1]),
    (9, [0, 1, 3, 2]),
    (-2, [0, 2, 5, 0]),
    (4, [0, 3, 3, 1]),
    (-9, [1, 0, 2, 3]),
    (1, [1, 0, 6, 0]),
    (-5, [1, 1, 4, 1]),
    (-9, [1, 2, 2, 2]),
    (19, [2, 0, 3, 2]),
    (-18, [2, 1, 1, 3]),
    (3, [2, 1, 5, 0]),
    (3, [2, 2, 3, 1]),
    (-3, [2, 3, 1, 2]),
    (3, [3, 0, 0, 4]),
    (-15, [3, 0, 4, 1]),
    (14, [3, 1, 2, 2]),
    (9, [3, 2, 0, 3]),
    (-3, [3, 2, 4, 0]),
    (3, [3, 3, 2, 1]),
    (1, [3, 4, 0, 2]),
    (1, [4, 0, 1, 3]),
    (3, [4, 0, 5, 0]),
    (-7, [4, 2, 1, 2]),
    (-1, [5, 1, 0, 3]),
];
const H_X4: &[Term] = &[
    (3, [0, 0, 3, 2]),
    (-1, [0, 1, 5, 0]),
    (9, [0, 2, 3, 1]),
    (1, [0, 4, 3, 0]),
    (1, [1, 0, 4, 1]),
    (-18, [1, 1, 2, 2]),
    (-7, [1, 2, 4, 0]),
    (-3, [1, 3, 2, 1]),
    (-9, [2, 0, 1, 3]),
    (14, [2, 1, 3, 1]),
    (-9, [2, 2, 1, 2]),
    (3, [2, 3, 3, 0]),
    (19, [3, 0, 2, 2]),
    (9, [3, 1, 0, 3]),
    (3, [3, 2, 2, 1]),
    (4, [3, 3, 0, 2]),
    (-15, [4, 0, 3, 1]),
    (-5, [4, 1, 1, 2]),
    (-3, [4, 2, 3, 0]),
    (-1, [5, 0, 0, 3]),
    (3, [5, 0, 4, 0]),
    (3, [5, 1, 2, 1]),
    (-2, [5, 2, 0, 2]),
    (1, [6, 0, 1, 2]),
];
const H_X5: &[Term] = &[
    (1, [0, 0, 5, 0]),
    (6, [0, 1, 3, 1]),
    (3, [0, 3, 3, 0]),
    (-9, [1, 0, 2, 2]),
    (-8, [1, 1, 4, 0]),
    (-9, [1, 2, 2, 1]),
    (14, [2, 0, 3, 1]),
    (-9, [2, 1, 1, 2]),
    (4, [2, 2, 3, 0]),
    (3, [3, 0, 0, 3]),
    (-2, [3, 0, 4, 0]),
    (6, [3, 1, 2, 1]),
    (6, [3, 2, 0, 2]),
    (2, [4, 0, 1, 2]),
    (-3, [4, 1, 3, 0]),
    (-3, [5, 0, 2, 1]),
    (-4, [5, 1, 0, 2]),
    (1, [6, 0, 3, 0]),
    (1, [7, 0, 0, 2]),
];
const H_X6: &[Term] = &[
    (1, [0, 0, 3, 1]),
    (3, [0, 2, 3, 0]),
    (-1, [1, 0, 4, 0]),
    (-9, [1, 1, 2, 1]),
    (-3, [2, 0, 1, 2]),
    (2, [2, 1, 3, 0]),
    (6, [3, 0, 2, 1]),
    (4, [3, 1, 0, 2]),
    (-2, [4, 0, 3, 0]),
    (-2, [5, 0, 0, 2]),
];
const H_X7: &[Term] = &[
    (1, [0, 1, 3, 0]),
    (-3, [1, 0, 2, 1]),
    (1, [2, 0, 3, 0]),
    (1, [3, 0, 0, 2]),
];

pub(super) const H_NUMERATOR: [&[Term]; 8] = [H_X0, H_X1, H_X2, H_X3, H_X4, H_X5, H_X6, H_X7];

// Coefficients a_0, ..., a_6 of S6(x).
const S6_A0: &[Term] = &[
    (1, [0, 0, 6, 4]),
    (-6, [2, 0, 4, 5]),
    (2, [3, 0, 5, 4]),
    (2, [3, 1, 3, 5]),
    (9, [4, 0, 2, 6]),
    (-6, [5, 0, 3, 5]),
    (-6, [5, 1, 1, 6]),
    (1, [6, 0, 4, 4]),
    (2, [6, 1, 2, 5]),
    (1, [6, 2, 0, 6]),
];
const S6_A1: &[Term] = &[
    (-2, [0, 0, 8, 2]),
    (4, [0, 1, 6, 3]),
    (-6, [1, 0, 5, 4]),
    (12, [2, 0, 6, 3]),
    (-18, [2, 1, 4, 4]),
    (20, [3, 0, 3, 5]),
    (-4, [3, 0, 7, 2]),
    (4, [3, 1, 5, 3]),
    (6, [3, 2, 3, 4]),
    (-26, [4, 0, 4, 4]),
    (12, [4, 1, 2, 5]),
    (-6, [5, 0, 1, 6]),
    (12, [5, 0, 5, 3]),
    (-6, [5, 1, 3, 4]),
    (-12, [5, 2, 1, 5]),
    (8, [6, 0, 2, 5]),
    (-2, [6, 0, 6, 2]),
    (2, [6, 1, 0, 6]),
    (4, [6, 2, 2, 4]),
    (2, [6, 3, 0, 5]),
    (-2, [7, 0, 3, 4]),
    (-2, [7, 1, 1, 5]),
];
const S6_A2: &[Term] = &[
    (2, [0, 0, 6, 3]),
    (1, [0, 0, 10, 0]),
    (-4, [0, 1, 8, 1]),
    (6, [0, 2, 6, 2]),
    (8, [1, 0, 7, 2]),
    (-18, [1, 1, 5, 3]),
    (-3, [2, 0, 4, 4]),
    (-6, [2, 0, 8, 1]),
    (12, [2, 1, 6, 2]),
    (-18, [2, 2, 4, 3]),
    (-10, [3, 0, 5, 3]),
    (2, [3, 0, 9, 0]),
    (46, [3, 1, 3, 4]),
    (-6, [3, 1, 7, 1]),
    (8, [3, 2, 5, 2]),
    (6, [3, 3, 3, 3]),
    (12, [4, 0, 2, 5]),
    (17, [4, 0, 6, 2]),
    (-22, [4, 1, 4, 3]),
    (-3, [4, 2, 2, 4]),
    (-34, [5, 0, 3, 4]),
    (-6, [5, 0, 7, 1]),
    (-24, [5, 1, 1, 5]),
    (6, [5, 1, 5, 2]),
    (-18, [5, 2, 3, 3]),
    (-6, [5, 3, 1, 4]),
    (1, [6, 0, 0, 6]),
    (12, [6, 0, 4, 3]),
    (1, [6, 0, 8, 0]),
    (50, [6, 1, 2, 4]),
    (-2, [6, 1, 6, 1]),
    (6, [6, 2, 0, 5]),
    (3, [6, 2, 4, 2]),
    (6, [6, 3, 2, 3]),
    (1, [6, 4, 0, 4]),
    (-8, [7, 0, 1, 5]),
    (-12, [7, 1, 3, 3]),
    (-10, [7, 2, 1, 4]),
    (3, [8, 0, 2, 4]),
    (2, [8, 1, 0, 5]),
];
const S6_A3: &[Term] = &[
    (2, [0, 0, 8, 1]),
    (6, [0, 1, 6, 2]),
    (-2, [0, 2, 8, 0]),
    (4, [0, 3, 6, 1]),
    (-12, [1, 0, 5, 3]),
    (-2, [1, 0, 9, 0]),
    (-2, [1, 1, 7, 1]),
    (-18, [1, 2, 5, 2]),
    (4, [2, 0, 6, 2]),
    (-6, [2, 1, 4, 3]),
    (6, [2, 1, 8, 0]),
    (6, [2, 2, 6, 1]),
    (-6, [2, 3, 4, 2]),
    (40, [3, 0, 3, 4]),
    (-6, [3, 0, 7, 1]),
    (46, [3, 1, 5, 2]),
    (32, [3, 2, 3, 3]),
    (-6, [3, 2, 7, 0]),
    (6, [3, 3, 5, 1]),
    (2, [3, 4, 3, 2]),
    (-92, [4, 0, 4, 3]),
    (-6, [4, 1, 2, 4]),
    (-18, [4, 1, 6, 1]),
    (-56, [4, 2, 4, 2]),
    (-6, [4, 3, 2, 3]),
    (-12, [5, 0, 1, 5]),
    (60, [5, 0, 5, 2]),
    (46, [5, 1, 3, 3]),
    (6, [5, 1, 7, 0]),
    (-18, [5, 2, 1, 4]),
    (18, [5, 2, 5, 1]),
    (6, [5, 3, 3, 2]),
    (4, [6, 0, 2, 4]),
    (-20, [6, 0, 6, 1]),
    (6, [6, 1, 0, 5]),
    (-18, [6, 1, 4, 2]),
    (6, [6, 2, 2, 3]),
    (-4, [6, 2, 6, 0]),
    (4, [6, 3, 0, 4]),
    (-6, [7, 0, 3, 3]),
    (2, [7, 0, 7, 0]),
    (-2, [7, 1, 1, 4]),
    (6, [7, 1, 5, 1]),
    (-6, [7, 2, 3, 2]),
    (2, [8, 0, 0, 5]),
    (6, [8, 1, 2, 3]),
    (-2, [8, 2, 0, 4]),
    (-2, [9, 0, 1, 4]),
];
const S6_A4: &[Term] = &[
    (1, [0, 0, 6, 2]),
    (2, [0, 1, 8, 0]),
    (6, [0, 2, 6, 1]),
    (1, [0, 4, 6, 0]),
    (-8, [1, 0, 7, 1]),
    (-24, [1, 1, 5, 2]),
    (-10, [1, 2, 7, 0]),
    (-6, [1, 3, 5, 1]),
    (12, [2, 0, 4, 3]),
    (3, [2, 0, 8, 0]),
    (50, [2, 1, 6, 1]),
    (-3, [2, 2, 4, 2]),
    (6, [2, 3, 6, 0]),
    (-34, [3, 0, 5, 2]),
    (46, [3, 1, 3, 3]),
    (-12, [3, 1, 7, 0]),
    (-18, [3, 2, 5, 1]),
    (6, [3, 3, 3, 2]),
    (-3, [4, 0, 2, 4]),
    (12, [4, 0, 6, 1]),
    (-22, [4, 1, 4, 2]),
    (-18, [4, 2, 2, 3]),
    (3, [4, 2, 6, 0]),
    (-10, [5, 0, 3, 3]),
    (-18, [5, 1, 1, 4]),
    (6, [5, 1, 5, 1]),
    (8, [5, 2, 3, 2]),
    (2, [6, 0, 0, 5]),
    (17, [6, 0, 4, 2]),
    (12, [6, 1, 2, 3]),
    (-2, [6, 1, 6, 0]),
    (6, [6, 2, 0, 4]),
    (8, [7, 0, 1, 4]),
    (-6, [7, 0, 5, 1]),
    (-6, [7, 1, 3, 2]),
    (-6, [8, 0, 2, 3]),
    (1, [8, 0, 6, 0]),
    (-4, [8, 1, 0, 4]),
    (2, [9, 0, 3, 2]),
    (1, [10, 0, 0, 4]),
];
const S6_A5: &[Term] = &[
    (2, [0, 1, 6, 1]),
    (2, [0, 3, 6, 0]),
    (-6, [1, 0, 5, 2]),
    (-2, [1, 1, 7, 0]),
    (-12, [1, 2, 5, 1]),
    (8, [2, 0, 6, 1]),
    (12, [2, 1, 4, 2]),
    (4, [2, 2, 6, 0]),
    (20, [3, 0, 3, 3]),
    (-2, [3, 0, 7, 0]),
    (-6, [3, 1, 5, 1]),
    (6, [3, 2, 3, 2]),
    (-26, [4, 0, 4, 2]),
    (-18, [4, 1, 2, 3]),
    (-6, [5, 0, 1, 4]),
    (12, [5, 0, 5, 1]),
    (4, [5, 1, 3, 2]),
    (12, [6, 0, 2, 3]),
    (-2, [6, 0, 6, 0]),
    (4, [6, 1, 0, 4]),
    (-4, [7, 0, 3, 2]),
    (-2, [8, 0, 0, 4]),
];
const S6_A6: &[Term] = &[
    (1, [0, 2, 6, 0]),
    (-6, [1, 1, 5, 1]),
    (9, [2, 0, 4, 2]),
    (2, [2, 1, 6, 0]),
    (-6, [3, 0, 5, 1]),
    (2, [3, 1, 3, 2]),
    (-6, [4, 0, 2, 3]),
    (1, [4, 0, 6, 0]),
    (2, [5, 0, 3, 2]),
    (1, [6, 0, 0, 4]),
];

pub(super) const S6_COEFFS: [&[Term]; 7] = [S6_A0, S6_A1, S6_A2, S6_A3, S6_A4, S6_A5, S6_A6];
