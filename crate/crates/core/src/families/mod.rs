//! Hypergeometric polynomial families in λ = x².

pub mod para_racah;
pub mod params;
pub mod wilson;

pub use para_racah::{para_racah, para_racah_lattice, BiLattice};
pub use params::{permutations4, ParamSet};
pub use wilson::{cont_dual_hahn, phi, pochhammer, wilson, wilson_scaled};
