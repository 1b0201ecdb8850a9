//! Exact construction and verification of genus-3 curves with real
//! multiplication by the real subfield of Q(ζ7).
#![allow(clippy::needless_range_loop)]

pub mod curvefactory;
pub mod dihedral;
pub mod diophantine;
pub mod exactcore;
pub mod polarization;
