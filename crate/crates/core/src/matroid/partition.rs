use super::{ExchangeView, MatroidOracle};
use crate::graph::Graph;
use crate::sets::{EdgeSet, VertexSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("constrained vertex {v} out of range for n={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {v} is constrained more than once")]
    Duplicate { v: usize },
    #[error("vertex {v}: alpha {alpha} exceeds beta {beta}")]
    AlphaAboveBeta { v: usize, alpha: u32, beta: u32 },
    #[error("constrained vertices {u} and {v} are adjacent (edge {edge}); the constrained set must be stable")]
    NotStable { u: usize, v: usize, edge: usize },
}

/// Lower and upper degree bounds on a stable vertex set `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBounds {
    constrained: VertexSet,
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl DegreeBounds {
    /// No constrained vertices.
    pub fn none(n: usize) -> Self {
        Self {
            constrained: VertexSet::new(n),
            alpha: vec![0; n],
            beta: vec![0; n],
        }
    }

    /// Validates `(v, alpha, beta)` entries against `g`: range, uniqueness,
    /// `alpha <= beta` and stability of the constrained set.
    pub fn new(g: &Graph, entries: &[(usize, u32, u32)]) -> Result<Self, BoundsError> {
        let n = g.vertex_count();
        let mut b = Self::none(n);
        for &(v, alpha, beta) in entries {
            if v >= n {
                return Err(BoundsError::VertexOutOfRange { v, n });
            }
            if !b.constrained.insert(v) {
                return Err(BoundsError::Duplicate { v });
            }
            if alpha > beta {
                return Err(BoundsError::AlphaAboveBeta { v, alpha, beta });
            }
            b.alpha[v] = alpha;
            b.beta[v] = beta;
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if b.constrained.contains(u) && b.constrained.contains(v) {
                return Err(BoundsError::NotStable { u, v, edge: e });
            }
        }
        Ok(b)
    }

    pub fn constrained(&self) -> &VertexSet {
        &self.constrained
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.constrained.iter()
    }

    pub fn is_constrained(&self, v: usize) -> bool {
        self.constrained.contains(v)
    }

    pub fn alpha(&self, v: usize) -> u32 {
        self.alpha[v]
    }

    pub fn beta(&self, v: usize) -> u32 {
        self.beta[v]
    }

    pub fn sum_alpha(&self, s: &VertexSet) -> i64 {
        s.iter().map(|v| i64::from(self.alpha[v])).sum()
    }

    pub fn sum_beta(&self, s: &VertexSet) -> i64 {
        s.iter().map(|v| i64::from(self.beta[v])).sum()
    }

    /// Whether tree degrees `degree(v)` respect every bound.
    pub fn admits(&self, mut degree: impl FnMut(usize) -> usize) -> bool {
        self.vertices().all(|v| {
            let d = degree(v);
            self.alpha[v] as usize <= d && d <= self.beta[v] as usize
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureKind {
    /// `alpha_v > min{beta_v, d_G(v)}` at this vertex.
    AlphaExceedsCapacity(usize),
    /// `sum alpha > n - 1`.
    AlphaSumTooLarge,
    /// `n - 1 > sum min{beta_v, d_G(v)} + |E(G - U)|`.
    CapacityTooSmall,
}

/// The inequality that prevents the degree-bounded partition matroid from
/// having a basis, with both sides evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub struct WellDefinednessFailure {
    pub kind: FailureKind,
    pub lhs: i64,
    pub rhs: i64,
}

impl fmt::Display for WellDefinednessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FailureKind::AlphaExceedsCapacity(v) => write!(
                f,
                "alpha at vertex {v} exceeds min(beta, degree): {} > {}",
                self.lhs, self.rhs
            ),
            FailureKind::AlphaSumTooLarge => {
                write!(f, "sum of alpha exceeds n-1: {} > {}", self.lhs, self.rhs)
            }
            FailureKind::CapacityTooSmall => write!(
                f,
                "n-1 exceeds degree capacity plus edges avoiding U: {} > {}",
                self.lhs, self.rhs
            ),
        }
    }
}

/// Generalized partition matroid on `E(G)`: bases are the `(n-1)`-edge sets
/// meeting every constrained vertex's cut between `alpha_v` and `beta_v` times.
///
/// Rank is the closed form `min{A(X), B(X)}` with
/// `A(X) = n - 1 - sum_v max{alpha_v - |X ∩ δ(v)|, 0}` and
/// `B(X) = sum_v min{beta_v, |X ∩ δ(v)|} + |X \ δ(U)|`.
#[derive(Debug, Clone)]
pub struct PartitionMatroid {
    n: usize,
    vertices: Vec<usize>,
    alpha: Vec<i64>,
    beta: Vec<i64>,
    /// Position in `vertices` of the constrained endpoint of each edge. A
    /// stable `U` gives every edge at most one.
    owner: Vec<Option<usize>>,
    outside: EdgeSet,
}

impl PartitionMatroid {
    /// Checks the well-definedness inequalities in order and builds the matroid.
    pub fn new(g: &Graph, bounds: &DegreeBounds) -> Result<Self, WellDefinednessFailure> {
        let n = g.vertex_count();
        assert_eq!(
            bounds.constrained().universe(),
            n,
            "bounds built for another graph"
        );
        let vertices: Vec<usize> = bounds.vertices().collect();
        let alpha: Vec<i64> = vertices
            .iter()
            .map(|&v| i64::from(bounds.alpha(v)))
            .collect();
        let beta: Vec<i64> = vertices
            .iter()
            .map(|&v| i64::from(bounds.beta(v)))
            .collect();

        let mut capacity = 0i64;
        for (i, &v) in vertices.iter().enumerate() {
            let cap = beta[i].min(g.degree(v) as i64);
            if alpha[i] > cap {
                return Err(WellDefinednessFailure {
                    kind: FailureKind::AlphaExceedsCapacity(v),
                    lhs: alpha[i],
                    rhs: cap,
                });
            }
            capacity += cap;
        }
        let top = n as i64 - 1;
        let alpha_sum: i64 = alpha.iter().sum();
        if alpha_sum > top {
            return Err(WellDefinednessFailure {
                kind: FailureKind::AlphaSumTooLarge,
                lhs: alpha_sum,
                rhs: top,
            });
        }
        let outside = g.edges_avoiding(bounds.constrained());
        capacity += outside.len() as i64;
        if top > capacity {
            return Err(WellDefinednessFailure {
                kind: FailureKind::CapacityTooSmall,
                lhs: top,
                rhs: capacity,
            });
        }

        let mut owner = vec![None; g.edge_count()];
        for (i, &v) in vertices.iter().enumerate() {
            for &(_, e) in g.incident(v) {
                owner[e] = Some(i);
            }
        }
        Ok(Self {
            n,
            vertices,
            alpha,
            beta,
            owner,
            outside,
        })
    }

    /// Constrained vertices in increasing order.
    pub fn constrained_vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edges of `G - U`.
    pub fn outside_edges(&self) -> &EdgeSet {
        &self.outside
    }

    fn counts(&self, x: &EdgeSet) -> (Vec<i64>, i64) {
        let mut counts = vec![0i64; self.vertices.len()];
        let mut free = 0;
        for e in x.iter() {
            match self.owner[e] {
                Some(i) => counts[i] += 1,
                None => free += 1,
            }
        }
        (counts, free)
    }

    /// The two terms `(A(X), B(X))` of the rank formula.
    pub fn rank_terms(&self, x: &EdgeSet) -> (i64, i64) {
        let (counts, free) = self.counts(x);
        let deficit: i64 = counts
            .iter()
            .zip(&self.alpha)
            .map(|(&c, &a)| (a - c).max(0))
            .sum();
        let capped: i64 = counts.iter().zip(&self.beta).map(|(&c, &b)| b.min(c)).sum();
        (self.n as i64 - 1 - deficit, capped + free)
    }
}

impl MatroidOracle for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.owner.len()
    }

    fn rank(&self, x: &EdgeSet) -> usize {
        let (a, b) = self.rank_terms(x);
        let r = a.min(b);
        debug_assert!(r >= 0, "negative rank on a well-defined matroid");
        r.max(0) as usize
    }

    fn exchange_view<'a>(&'a self, base: &EdgeSet) -> Box<dyn ExchangeView + 'a> {
        let (counts, free) = self.counts(base);
        let deficit = counts
            .iter()
            .zip(&self.alpha)
            .map(|(&c, &a)| (a - c).max(0))
            .sum();
        let capped = counts.iter().zip(&self.beta).map(|(&c, &b)| b.min(c)).sum();
        Box::new(PartitionExchange {
            m: self,
            counts,
            free,
            deficit,
            capped,
            size: base.len() as i64,
        })
    }
}

/// Rank of `I` with one or two single-edge count changes, in O(1).
struct PartitionExchange<'a> {
    m: &'a PartitionMatroid,
    counts: Vec<i64>,
    free: i64,
    deficit: i64,
    capped: i64,
    size: i64,
}

impl PartitionExchange<'_> {
    fn rank_after(&self, changes: &[(usize, i64)]) -> i64 {
        let (mut deficit, mut capped, mut free) = (self.deficit, self.capped, self.free);
        // Net change per owner; at most two distinct owners.
        let mut owners: [(usize, i64); 2] = [(usize::MAX, 0); 2];
        for &(e, d) in changes {
            match self.m.owner[e] {
                None => free += d,
                Some(i) => {
                    if let Some(slot) = owners.iter_mut().find(|s| s.0 == i) {
                        slot.1 += d;
                    } else if let Some(slot) = owners.iter_mut().find(|s| s.0 == usize::MAX) {
                        *slot = (i, d);
                    }
                }
            }
        }
        for &(i, d) in owners.iter().filter(|s| s.0 != usize::MAX && s.1 != 0) {
            let (a, b, c) = (self.m.alpha[i], self.m.beta[i], self.counts[i]);
            deficit += (a - c - d).max(0) - (a - c).max(0);
            capped += b.min(c + d) - b.min(c);
        }
        (self.m.n as i64 - 1 - deficit).min(capped + free)
    }
}

impl ExchangeView for PartitionExchange<'_> {
    fn can_add(&self, x: usize) -> bool {
        self.rank_after(&[(x, 1)]) == self.size + 1
    }

    fn can_swap(&self, y: usize, x: usize) -> bool {
        self.rank_after(&[(y, -1), (x, 1)]) == self.size
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::matroid::OracleExchange;

    fn es(m: usize, xs: &[usize]) -> EdgeSet {
        EdgeSet::from_indices(m, xs.iter().copied())
    }

    fn triangle_m1() -> PartitionMatroid {
        let g = triangle();
        let b = DegreeBounds::new(&g, &[(0, 1, 1)]).unwrap();
        PartitionMatroid::new(&g, &b).unwrap()
    }

    #[test]
    fn bounds_validation() {
        let g = cycle(4);
        assert_eq!(
            DegreeBounds::new(&g, &[(0, 1, 1), (1, 0, 1)]),
            Err(BoundsError::NotStable {
                u: 0,
                v: 1,
                edge: 0
            })
        );
        assert_eq!(
            DegreeBounds::new(&g, &[(0, 2, 1)]),
            Err(BoundsError::AlphaAboveBeta {
                v: 0,
                alpha: 2,
                beta: 1
            })
        );
        assert_eq!(
            DegreeBounds::new(&g, &[(0, 0, 1), (0, 0, 1)]),
            Err(BoundsError::Duplicate { v: 0 })
        );
        assert_eq!(
            DegreeBounds::new(&g, &[(9, 0, 1)]),
            Err(BoundsError::VertexOutOfRange { v: 9, n: 4 })
        );
        assert!(DegreeBounds::new(&g, &[(0, 0, 1), (2, 1, 2)]).is_ok());
    }

    #[test]
    fn well_definedness_examples() {
        let p = path(3);
        let b = DegreeBounds::new(&p, &[(1, 1, 1)]).unwrap();
        assert_eq!(
            PartitionMatroid::new(&p, &b).unwrap_err(),
            WellDefinednessFailure {
                kind: FailureKind::CapacityTooSmall,
                lhs: 2,
                rhs: 1
            }
        );

        triangle_m1();

        let g = complete(4);
        assert!(PartitionMatroid::new(&g, &DegreeBounds::none(4)).is_ok());

        let s = star(3);
        let b = DegreeBounds::new(&s, &[(1, 2, 2)]).unwrap();
        assert_eq!(
            PartitionMatroid::new(&s, &b).unwrap_err(),
            WellDefinednessFailure {
                kind: FailureKind::AlphaExceedsCapacity(1),
                lhs: 2,
                rhs: 1
            }
        );

        // K_{2,2} with one side constrained at alpha = 2 each.
        let k22 = cycle(4);
        let b = DegreeBounds::new(&k22, &[(0, 2, 2), (2, 2, 2)]).unwrap();
        assert_eq!(
            PartitionMatroid::new(&k22, &b).unwrap_err(),
            WellDefinednessFailure {
                kind: FailureKind::AlphaSumTooLarge,
                lhs: 4,
                rhs: 3
            }
        );
    }

    #[test]
    fn rank_examples() {
        let m = triangle_m1();
        assert_eq!(m.rank(&es(3, &[])), 0);
        assert_eq!(m.rank_terms(&es(3, &[0, 1])), (2, 1));
        assert_eq!(m.rank(&es(3, &[0, 1])), 1);
        assert_eq!(m.rank_terms(&es(3, &[2])), (1, 1));
        assert_eq!(m.rank(&es(3, &[2])), 1);
    }

    #[test]
    fn independence_examples() {
        let m = triangle_m1();
        assert!(m.is_independent(&es(3, &[])));
        assert!(!m.is_independent(&es(3, &[0, 1])));
        assert!(m.is_independent(&es(3, &[1, 2])));
    }

    #[test]
    fn fast_exchange_agrees_with_rank() {
        let g = complete(5);
        let b = DegreeBounds::new(&g, &[(0, 1, 2)]).unwrap();
        let m = PartitionMatroid::new(&g, &b).unwrap();
        let base = es(10, &[0, 4, 7]);
        assert!(m.is_independent(&base));
        let fast = m.exchange_view(&base);
        let slow = OracleExchange {
            oracle: &m,
            base: base.clone(),
        };
        for x in (0..10).filter(|x| !base.contains(*x)) {
            assert_eq!(fast.can_add(x), slow.can_add(x), "add {x}");
            for y in base.iter() {
                assert_eq!(fast.can_swap(y, x), slow.can_swap(y, x), "swap {y} {x}");
            }
        }
    }
}
