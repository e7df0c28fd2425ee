//! Instance files and their validation.
//!
//! ```json
//! {"n": 4, "edges": [[0,1,1],[0,2,2]], "constrained": [{"v":0,"alpha":0,"beta":1}]}
//! ```

use crate::graph::{Graph, GraphError};
use crate::matroid::{BoundsError, DegreeBounds};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

/// Raw instance file contents, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: i64,
    pub edges: Vec<[i64; 3]>,
    #[serde(default)]
    pub constrained: Vec<ConstraintEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintEntry {
    pub v: i64,
    pub alpha: i64,
    pub beta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("n: must be at least 1, got {0}")]
    EmptyGraph(i64),
    #[error("edges[{index}]: {message}")]
    Edge { index: usize, message: String },
    #[error("constrained[{index}]: {message}")]
    Constraint { index: usize, message: String },
    #[error("edges: {0}")]
    Graph(#[from] GraphError),
    #[error("constrained: {0}")]
    Bounds(#[from] BoundsError),
}

/// A validated instance: graph, degree bounds on a stable set, and edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub bounds: DegreeBounds,
    pub weights: Vec<i64>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        serde_json::from_str(text).map_err(|e| InstanceError::Json(e.to_string()))
    }

    /// Canonical text form, one line.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"n\": {}, \"edges\": [", self.n);
        for (i, [u, v, w]) in self.edges.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "[{u},{v},{w}]");
        }
        out.push_str("], \"constrained\": [");
        for (i, c) in self.constrained.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(
                out,
                "{{\"v\":{},\"alpha\":{},\"beta\":{}}}",
                c.v, c.alpha, c.beta
            );
        }
        out.push_str("]}");
        out
    }

    pub fn validate(&self) -> Result<Instance, InstanceError> {
        if self.n < 1 {
            return Err(InstanceError::EmptyGraph(self.n));
        }
        let n = self.n;
        let mut pairs = Vec::with_capacity(self.edges.len());
        let mut weights = Vec::with_capacity(self.edges.len());
        for (index, &[u, v, w]) in self.edges.iter().enumerate() {
            let err = |message: String| InstanceError::Edge { index, message };
            for x in [u, v] {
                if x < 0 || x >= n {
                    return Err(err(format!("vertex {x} out of range 0..{n}")));
                }
            }
            if u == v {
                return Err(err(format!("self-loop at vertex {u}")));
            }
            if u > v {
                return Err(err(format!("endpoints must satisfy u < v, got [{u},{v}]")));
            }
            pairs.push((u as usize, v as usize));
            weights.push(w);
        }
        let graph = Graph::new(n as usize, &pairs)?;

        let mut entries = Vec::with_capacity(self.constrained.len());
        for (index, c) in self.constrained.iter().enumerate() {
            let err = |message: String| InstanceError::Constraint { index, message };
            if c.v < 0 || c.v >= n {
                return Err(err(format!("vertex {} out of range 0..{n}", c.v)));
            }
            let alpha = u32::try_from(c.alpha).map_err(|_| {
                err(format!(
                    "alpha {} is not a non-negative 32-bit integer",
                    c.alpha
                ))
            })?;
            let beta = u32::try_from(c.beta).map_err(|_| {
                err(format!(
                    "beta {} is not a non-negative 32-bit integer",
                    c.beta
                ))
            })?;
            if alpha > beta {
                return Err(err(format!("alpha {alpha} exceeds beta {beta}")));
            }
            entries.push((c.v as usize, alpha, beta));
        }
        let bounds = DegreeBounds::new(&graph, &entries)?;
        Ok(Instance {
            graph,
            bounds,
            weights,
        })
    }
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        InstanceFile::parse(text)?.validate()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}
