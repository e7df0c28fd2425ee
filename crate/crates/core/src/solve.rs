//! The decision and optimization pipeline.
//!
//! Build the degree-bounded partition matroid (a failed well-definedness
//! check is already a certificate), intersect it with the graphic matroid
//! at minimum weight with target `n - 1`, and either return the tree or
//! convert the engine's minimizer into a violating set.

use crate::certify::{
    extract_certificate, map_welldefinedness_failure, Certificate, CertifyError, ExtractionCase,
};
use crate::instance::Instance;
use crate::intersection::{min_weight_common_basis, EngineError};
use crate::matroid::{FailureKind, GraphicMatroid, PartitionMatroid};
use crate::sets::EdgeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

/// Where an infeasibility certificate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateSource {
    WellDefinedness(FailureKind),
    Extraction(ExtractionCase),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Feasible {
        tree: EdgeSet,
        cost: i64,
    },
    Infeasible {
        certificate: Certificate,
        source: CertificateSource,
    },
}

impl SolveOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveOutcome::Feasible { .. })
    }
}

/// Finds a minimum-cost spanning tree within the degree bounds, or a certificate that none exists.
pub fn solve(instance: &Instance) -> Result<SolveOutcome, SolveError> {
    let g = &instance.graph;
    let b = &instance.bounds;
    let m1 = match PartitionMatroid::new(g, b) {
        Ok(m1) => m1,
        Err(failure) => {
            let certificate = map_welldefinedness_failure(g, b, &failure)?;
            return Ok(SolveOutcome::Infeasible {
                certificate,
                source: CertificateSource::WellDefinedness(failure.kind),
            });
        }
    };
    let m2 = GraphicMatroid::new(g);
    let target = g.vertex_count() - 1;
    let run = min_weight_common_basis(&m1, &m2, &instance.weights, target)?;

    if run.result.size() == target {
        let tree = run.result.common_set;
        if !g.is_spanning_tree(&tree) || !b.admits(|v| g.degree_in(&tree, v)) {
            return Err(SolveError::InternalInvariantBroken(
                "common basis is not a degree-feasible spanning tree".into(),
            ));
        }
        return Ok(SolveOutcome::Feasible {
            tree,
            cost: run.cost,
        });
    }
    let minimizer = run.result.minimizer.ok_or_else(|| {
        SolveError::InternalInvariantBroken("engine fell short without a minimizer".into())
    })?;
    let extraction = extract_certificate(g, b, &minimizer)?;
    Ok(SolveOutcome::Infeasible {
        certificate: extraction.certificate,
        source: CertificateSource::Extraction(extraction.case),
    })
}
