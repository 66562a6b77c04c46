//! Lattice polytopes and the orbit-wise jet orders of the monomial spaces
//! they define.

mod faces;
mod lattice;
mod orders;
mod polytope;
mod report;

pub use faces::{faces, find_face, smooth_check, vertex_chart, Face, SmoothReport, VertexChart, VertexDiagnostic};
pub use lattice::IVec;
pub use orders::{
    d_gonal, edge_stats, n1_surj_toric, n_inj_face, n_inj_hilbert, n_inj_max, n_inj_vertex,
    n_surj_toric, very_ample_check, EdgeStats, FacetSurj, HilbertProfile, SaturationReport,
};
pub use polytope::{hirzebruch, simplex, Edge, Facet, LatticePolytope};
pub use report::{toric_report, FaceOrder, ToricReport};
