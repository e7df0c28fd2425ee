//! Minimum-cost spanning trees with degree bounds on a stable vertex set.
//!
//! Given a graph `G`, a stable set `U` and bounds `alpha_v <= beta_v` for
//! `v in U`, [`solve`] either returns a cheapest spanning tree `T` with
//! `alpha_v <= d_T(v) <= beta_v` on `U`, or a [`Certificate`]: a set
//! `S ⊆ U` whose bounds are provably impossible to meet. Feasible trees are
//! exactly the common bases of a degree-bounded partition matroid and the
//! graphic matroid of `G`, so the solver is weighted matroid intersection.

pub mod certify;
mod dsu;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod intersection;
pub mod matroid;
pub mod report;
pub mod scale;
pub mod sets;
pub mod solve;

pub use certify::{verify_certificate, Certificate, Condition, Limits};
pub use graph::Graph;
pub use instance::{Instance, InstanceFile};
pub use matroid::{DegreeBounds, GraphicMatroid, MatroidOracle, PartitionMatroid};
pub use report::ResultFile;
pub use sets::{EdgeSet, VertexSet};
pub use solve::{solve, CertificateSource, SolveOutcome};
