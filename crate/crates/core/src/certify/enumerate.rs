use super::{check_condition_alpha, check_condition_beta, Certificate, CertifyError, Limits};
use crate::dsu::DisjointSet;
use crate::graph::Graph;
use crate::matroid::DegreeBounds;
use crate::sets::EdgeSet;

/// Ground-truth verdict from exhaustive spanning-tree enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub feasible: bool,
    /// Cheapest feasible tree, lexicographically smallest among optima.
    pub best_tree: Option<EdgeSet>,
    /// Cost of `best_tree`; absent without weights.
    pub best_cost: Option<i64>,
    /// Present iff infeasible; found by the exhaustive condition checks.
    pub violating_set: Option<Certificate>,
    /// Spanning trees visited, feasible or not.
    pub trees: usize,
}

struct Search<'a> {
    g: &'a Graph,
    b: &'a DegreeBounds,
    weights: Option<&'a [i64]>,
    chosen: Vec<usize>,
    best: Option<(i128, Vec<usize>)>,
    trees: usize,
}

impl Search<'_> {
    fn leaf(&mut self) {
        self.trees += 1;
        let tree = EdgeSet::from_indices(self.g.edge_count(), self.chosen.iter().copied());
        if !self.b.admits(|v| self.g.degree_in(&tree, v)) {
            return;
        }
        let cost: i128 = match self.weights {
            Some(w) => self.chosen.iter().map(|&e| i128::from(w[e])).sum(),
            None => 0,
        };
        let better = match &self.best {
            None => true,
            Some((c, t)) => (cost, &self.chosen) < (*c, t),
        };
        if better {
            self.best = Some((cost, self.chosen.clone()));
        }
    }

    /// Include/exclude recursion over edges from `next`, with the forest of
    /// chosen edges in `dsu`.
    fn recurse(&mut self, next: usize, dsu: &DisjointSet) {
        let n = self.g.vertex_count();
        if self.chosen.len() + 1 == n {
            self.leaf();
            return;
        }
        if next == self.g.edge_count() {
            return;
        }
        let (u, v) = self.g.endpoints(next);
        let mut with = dsu.clone();
        if with.union(u, v) {
            self.chosen.push(next);
            self.recurse(next + 1, &with);
            self.chosen.pop();
        }
        // Skipping the edge is only useful if the rest can still connect everything.
        let mut rest = dsu.clone();
        for e in next + 1..self.g.edge_count() {
            let (a, b) = self.g.endpoints(e);
            rest.union(a, b);
        }
        if rest.count() == 1 {
            self.recurse(next + 1, dsu);
        }
    }
}

/// Enumerates every spanning tree and keeps the cheapest one meeting the bounds.
pub fn enumerate_feasible_trees(
    g: &Graph,
    b: &DegreeBounds,
    weights: Option<&[i64]>,
    limits: Limits,
) -> Result<OracleVerdict, CertifyError> {
    let n = g.vertex_count();
    if n > limits.enumeration {
        return Err(CertifyError::LimitExceeded {
            what: "n",
            got: n,
            limit: limits.enumeration,
        });
    }
    if let Some(w) = weights {
        assert_eq!(w.len(), g.edge_count(), "one weight per edge");
    }
    let mut search = Search {
        g,
        b,
        weights,
        chosen: Vec::new(),
        best: None,
        trees: 0,
    };
    if n >= 1 && g.is_connected() {
        search.recurse(0, &DisjointSet::new(n));
    }
    let trees = search.trees;
    match search.best {
        Some((cost, tree)) => {
            let best_cost = match weights {
                Some(_) => Some(i64::try_from(cost).map_err(|_| {
                    CertifyError::InternalInvariantBroken("tree cost overflows i64".into())
                })?),
                None => None,
            };
            Ok(OracleVerdict {
                feasible: true,
                best_tree: Some(EdgeSet::from_indices(g.edge_count(), tree)),
                best_cost,
                violating_set: None,
                trees,
            })
        }
        None => {
            let cert = match check_condition_alpha(g, b, limits.subset)? {
                Some(c) => c,
                None => check_condition_beta(g, b, limits.subset)?.ok_or_else(|| {
                    CertifyError::InternalInvariantBroken(
                        "no feasible tree but both conditions hold".into(),
                    )
                })?,
            };
            Ok(OracleVerdict {
                feasible: false,
                best_tree: None,
                best_cost: None,
                violating_set: Some(cert),
                trees,
            })
        }
    }
}
