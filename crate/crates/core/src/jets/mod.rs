//! Taylor maps of a finite-dimensional polynomial space and the orders
//! at which they become injective or stop being surjective.

mod matrix;
mod orders;
mod rank;
mod subspace;
mod weierstrass;

pub use matrix::{jet_matrix, EvalPoint, JetEntries, JetMatrix};
pub use orders::{
    generic_n_inj, n_inj_at, n_surj_at, orbit_generic_orders, weierstrass_scan, OrbitOrders, OrderReport,
};
pub use rank::{generic_rank, rank_exact, GenericRank, RankMethod};
pub use subspace::{coefficient_rows, SubspaceV};
pub use weierstrass::{weierstrass_minors, MinorsReport};
