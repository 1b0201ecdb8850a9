//! The dihedral group of order 14: characters, symmetric powers, induced
//! representations, projective orbits and covering classes over F7.

mod characters;
mod coverings;
mod group;
mod projective;

pub use characters::{
    char_table, decompose, induce, lefschetz_h1, sym_power_char, ClassFunction, Irrep, Multiplicities, RepError,
    Subgroup, SubgroupCharacter,
};
pub use coverings::{alternating_sum, enumerate_coverings, is_valid_covering, CoveringClass};
pub use group::{Class, D7Element, CLASS_SIZES, ORDER};
pub use projective::{act, orbit, proj_eq, projective_fixed_points, stabilizer, OrbitRow, ProjPoint};
