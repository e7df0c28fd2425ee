//! Turning solver failures into violating sets.
//!
//! Two sources of failure exist. Either the degree-bounded partition matroid
//! has no basis at all, in which case the broken inequality maps directly to
//! a set `S`, or the intersection engine stops short of `n - 1` and returns
//! a minimizer `X` with `r1(X) + r2(E \ X) <= n - 2`. The minimizer is then
//! shrunk until it exposes `S` directly: when `A(X) <= B(X)` the lower
//! bounds are to blame, otherwise the upper bounds.

use super::{alpha_sides, verify_certificate, Certificate, CertifyError, Condition};
use crate::dsu::DisjointSet;
use crate::graph::Graph;
use crate::matroid::{DegreeBounds, FailureKind, WellDefinednessFailure};
use crate::sets::{EdgeSet, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtractionCase {
    /// `A(X) <= B(X)`: lower bounds cannot be met.
    LowerBounds,
    /// `B(X) < A(X)`: upper bounds cannot be met.
    UpperBounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub certificate: Certificate,
    pub case: ExtractionCase,
    /// Number of single-vertex cut removals applied to the minimizer.
    pub shrinks: usize,
}

fn ensure_valid(g: &Graph, b: &DegreeBounds, c: Certificate) -> Result<Certificate, CertifyError> {
    if verify_certificate(g, b, &c) {
        Ok(c)
    } else {
        Err(CertifyError::InternalInvariantBroken(format!(
            "derived certificate fails verification: {c:?}"
        )))
    }
}

/// Evaluates the rank-formula terms straight from the graph.
struct Terms<'a> {
    g: &'a Graph,
    b: &'a DegreeBounds,
    u: Vec<usize>,
}

impl Terms<'_> {
    fn hits(&self, x: &EdgeSet, v: usize) -> i64 {
        self.g.degree_in(x, v) as i64
    }

    fn a(&self, x: &EdgeSet) -> i64 {
        let n = self.g.vertex_count() as i64;
        n - 1
            - self
                .u
                .iter()
                .map(|&v| (i64::from(self.b.alpha(v)) - self.hits(x, v)).max(0))
                .sum::<i64>()
    }

    fn b(&self, x: &EdgeSet) -> i64 {
        let capped: i64 = self
            .u
            .iter()
            .map(|&v| i64::from(self.b.beta(v)).min(self.hits(x, v)))
            .sum();
        let outside = x
            .iter()
            .filter(|&e| {
                let (p, q) = self.g.endpoints(e);
                !self.b.is_constrained(p) && !self.b.is_constrained(q)
            })
            .count() as i64;
        capped + outside
    }

    fn r2_complement(&self, x: &EdgeSet) -> i64 {
        let n = self.g.vertex_count() as i64;
        n - self.g.component_count_spanning(&x.complement()) as i64
    }

    fn remove_cut(&self, x: &mut EdgeSet, v: usize) {
        for &(_, e) in self.g.incident(v) {
            x.remove(e);
        }
    }

    /// Smallest `v` in `U` with `0 < |X ∩ δ(v)| < bound(v)`.
    fn shrinkable(&self, x: &EdgeSet, bound: impl Fn(usize) -> u32) -> Option<usize> {
        self.u.iter().copied().find(|&v| {
            let h = self.hits(x, v);
            h > 0 && h < i64::from(bound(v))
        })
    }
}

/// Converts an intersection minimizer into a verified certificate.
///
/// `x` must satisfy `r1(X) + r2(E \ X) <= n - 2`.
pub fn extract_certificate(
    g: &Graph,
    b: &DegreeBounds,
    x: &EdgeSet,
) -> Result<Extraction, CertifyError> {
    let terms = Terms {
        g,
        b,
        u: b.vertices().collect(),
    };
    let n = g.vertex_count() as i64;
    let (a, bv) = (terms.a(x), terms.b(x));
    let value = a.min(bv) + terms.r2_complement(x);
    if value > n - 2 {
        return Err(CertifyError::NotAMinimizer {
            value,
            bound: n - 2,
        });
    }

    let mut x = x.clone();
    let mut shrinks = 0;
    if a <= bv {
        while let Some(v) = terms.shrinkable(&x, |v| b.alpha(v)) {
            terms.remove_cut(&mut x, v);
            shrinks += 1;
        }
        let untouched = VertexSet::from_indices(
            g.vertex_count(),
            terms.u.iter().copied().filter(|&v| terms.hits(&x, v) == 0),
        );
        let certificate = split_lower_bound_witness(g, b, &untouched).ok_or_else(|| {
            CertifyError::InternalInvariantBroken(format!(
                "no component of {untouched:?} violates the lower-bound condition"
            ))
        })?;
        Ok(Extraction {
            certificate: ensure_valid(g, b, certificate)?,
            case: ExtractionCase::LowerBounds,
            shrinks,
        })
    } else {
        let touching_u = g.edge_cut(b.constrained());
        x = x.intersection(&touching_u);
        while let Some(v) = terms.shrinkable(&x, |v| b.beta(v)) {
            terms.remove_cut(&mut x, v);
            shrinks += 1;
        }
        let saturated = VertexSet::from_indices(
            g.vertex_count(),
            terms
                .u
                .iter()
                .copied()
                .filter(|&v| terms.hits(&x, v) >= i64::from(b.beta(v))),
        );
        let certificate = Certificate::evaluate(g, b, Condition::Beta, saturated.clone())
            .ok_or_else(|| {
                CertifyError::InternalInvariantBroken(format!(
                    "{saturated:?} does not violate the upper-bound condition"
                ))
            })?;
        Ok(Extraction {
            certificate: ensure_valid(g, b, certificate)?,
            case: ExtractionCase::UpperBounds,
            shrinks,
        })
    }
}

/// Splits `s` along the components of the graph on `S ∪ N(S)` with edge set
/// `δ(S)` and returns the first part (by smallest vertex) that violates the
/// lower-bound condition.
fn split_lower_bound_witness(g: &Graph, b: &DegreeBounds, s: &VertexSet) -> Option<Certificate> {
    let n = g.vertex_count();
    let mut dsu = DisjointSet::new(n);
    for e in g.edge_cut(s).iter() {
        let (p, q) = g.endpoints(e);
        dsu.union(p, q);
    }
    let mut parts: Vec<(usize, VertexSet)> = Vec::new();
    for v in s.iter() {
        let root = dsu.find(v);
        match parts.iter_mut().find(|(r, _)| *r == root) {
            Some((_, part)) => {
                part.insert(v);
            }
            None => parts.push((root, VertexSet::from_indices(n, [v]))),
        }
    }
    parts.into_iter().find_map(|(_, part)| {
        let (lhs, rhs) = alpha_sides(g, b, &part);
        (lhs > rhs).then_some(Certificate {
            violated: Condition::Alpha,
            witness: part,
            lhs,
            rhs,
        })
    })
}

/// Maps a failed well-definedness check to a violating set:
/// a single vertex or all of `U` for the lower-bound failures, and
/// `{v in U : d(v) >= beta_v}` when the capacity is too small.
pub fn map_welldefinedness_failure(
    g: &Graph,
    b: &DegreeBounds,
    failure: &WellDefinednessFailure,
) -> Result<Certificate, CertifyError> {
    let n = g.vertex_count();
    let (condition, witness) = match failure.kind {
        FailureKind::AlphaExceedsCapacity(v) => (Condition::Alpha, VertexSet::from_indices(n, [v])),
        FailureKind::AlphaSumTooLarge => (Condition::Alpha, b.constrained().clone()),
        FailureKind::CapacityTooSmall => (
            Condition::Beta,
            VertexSet::from_indices(
                n,
                b.vertices().filter(|&v| g.degree(v) >= b.beta(v) as usize),
            ),
        ),
    };
    let certificate = Certificate::evaluate(g, b, condition, witness).ok_or_else(|| {
        CertifyError::InternalInvariantBroken(format!(
            "{failure} does not map to a violated condition"
        ))
    })?;
    ensure_valid(g, b, certificate)
}
