//! Infeasibility certificates for degree-bounded spanning trees.
//!
//! A tree with `alpha_v <= d_T(v) <= beta_v` on a stable set `U` exists iff
//!
//! * `sum_{v in S} alpha_v <= |S| + |N(S)| - 1` for every nonempty `S ⊆ U`, and
//! * `sum_{v in S} beta_v >= ω(G - S) + |S| - 1` for every `S ⊆ U`.
//!
//! A [`Certificate`] names a set `S` breaking one of these together with
//! both sides of the broken inequality. This module holds the exhaustive
//! condition checkers and the spanning-tree enumerator (the brute-force
//! ground truths), the conversion of solver failures into certificates, and
//! independent re-verification.

mod conditions;
mod enumerate;
mod extract;

pub use conditions::{check_condition_alpha, check_condition_beta, subsets_by_size};
pub use enumerate::{enumerate_feasible_trees, OracleVerdict};
pub use extract::{extract_certificate, map_welldefinedness_failure, Extraction, ExtractionCase};

use crate::graph::Graph;
use crate::matroid::DegreeBounds;
use crate::sets::VertexSet;
use thiserror::Error;

/// Default bound on `|U|` for exhaustive condition checks.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;
/// Default bound on `n` for spanning-tree enumeration.
pub const DEFAULT_ENUM_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub subset: usize,
    pub enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            subset: DEFAULT_SUBSET_LIMIT,
            enumeration: DEFAULT_ENUM_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("{what} is {got}, above the exhaustive limit {limit}")]
    LimitExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("input is not a minimizer: r1(X) + r2(E \\ X) = {value} > n - 2 = {bound}")]
    NotAMinimizer { value: i64, bound: i64 },
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

/// Which of the two conditions a certificate violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Lower bounds: `sum alpha > |S| + |N(S)| - 1`.
    Alpha,
    /// Upper bounds: `sum beta < ω(G - S) + |S| - 1`.
    Beta,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Alpha => "alpha",
            Condition::Beta => "beta",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub violated: Condition,
    pub witness: VertexSet,
    pub lhs: i64,
    pub rhs: i64,
}

/// `(sum alpha over S, |S| + |N(S)| - 1)`.
pub fn alpha_sides(g: &Graph, b: &DegreeBounds, s: &VertexSet) -> (i64, i64) {
    let rhs = s.len() as i64 + g.neighbors(s).len() as i64 - 1;
    (b.sum_alpha(s), rhs)
}

/// `(sum beta over S, ω(G - S) + |S| - 1)`.
pub fn beta_sides(g: &Graph, b: &DegreeBounds, s: &VertexSet) -> (i64, i64) {
    let rhs = g.component_count_after_removal(s) as i64 + s.len() as i64 - 1;
    (b.sum_beta(s), rhs)
}

impl Certificate {
    /// Evaluates `condition` at `s`, returning a certificate if it is violated.
    pub fn evaluate(
        g: &Graph,
        b: &DegreeBounds,
        condition: Condition,
        s: VertexSet,
    ) -> Option<Self> {
        match condition {
            Condition::Alpha => {
                let (lhs, rhs) = alpha_sides(g, b, &s);
                (!s.is_empty() && lhs > rhs).then_some(Certificate {
                    violated: Condition::Alpha,
                    witness: s,
                    lhs,
                    rhs,
                })
            }
            Condition::Beta => {
                let (lhs, rhs) = beta_sides(g, b, &s);
                (lhs < rhs).then_some(Certificate {
                    violated: Condition::Beta,
                    witness: s,
                    lhs,
                    rhs,
                })
            }
        }
    }
}

/// Recomputes both sides from the graph and checks the stored values and the
/// strict violation.
pub fn verify_certificate(g: &Graph, b: &DegreeBounds, c: &Certificate) -> bool {
    if c.witness.universe() != g.vertex_count() || !c.witness.is_subset(b.constrained()) {
        return false;
    }
    match Certificate::evaluate(g, b, c.violated, c.witness.clone()) {
        Some(fresh) => fresh.lhs == c.lhs && fresh.rhs == c.rhs,
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn verify_examples() {
        let s = star(3);
        let b = DegreeBounds::new(&s, &[(1, 2, 2)]).unwrap();
        let hand = Certificate {
            violated: Condition::Alpha,
            witness: VertexSet::from_indices(4, [1]),
            lhs: 2,
            rhs: 1,
        };
        assert!(verify_certificate(&s, &b, &hand));

        let swapped = Certificate {
            lhs: 1,
            rhs: 2,
            ..hand.clone()
        };
        assert!(!verify_certificate(&s, &b, &swapped));

        let g = cycle(5);
        let empty = Certificate {
            violated: Condition::Beta,
            witness: VertexSet::new(5),
            lhs: 0,
            rhs: 0,
        };
        assert!(!verify_certificate(&g, &DegreeBounds::none(5), &empty));
    }

    #[test]
    fn witness_outside_u_is_rejected() {
        let s = star(3);
        let b = DegreeBounds::new(&s, &[(1, 2, 2)]).unwrap();
        let c = Certificate {
            violated: Condition::Alpha,
            witness: VertexSet::from_indices(4, [1, 2]),
            lhs: 2,
            rhs: 1,
        };
        assert!(!verify_certificate(&s, &b, &c));
    }
}
