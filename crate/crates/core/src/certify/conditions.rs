use super::{Certificate, CertifyError, Condition};
use crate::graph::Graph;
use crate::matroid::DegreeBounds;
use crate::sets::VertexSet;

/// Subsets of `items` by increasing size, each size in lexicographic order
/// of positions. Starts with the empty set when `min_size` is 0.
pub fn subsets_by_size(items: &[usize], min_size: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    (min_size..=items.len()).flat_map(move |k| {
        Combinations::new(items.len(), k).map(move |idx| idx.iter().map(|&i| items[i]).collect())
    })
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        // Advance the rightmost position that still has room.
        match (0..k).rev().find(|&i| self.idx[i] < self.n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

fn first_violation(
    g: &Graph,
    b: &DegreeBounds,
    limit: usize,
    condition: Condition,
) -> Result<Option<Certificate>, CertifyError> {
    let u: Vec<usize> = b.vertices().collect();
    if u.len() > limit {
        return Err(CertifyError::LimitExceeded {
            what: "|U|",
            got: u.len(),
            limit,
        });
    }
    let min_size = match condition {
        Condition::Alpha => 1,
        Condition::Beta => 0,
    };
    let n = g.vertex_count();
    let found = subsets_by_size(&u, min_size)
        .find_map(|s| Certificate::evaluate(g, b, condition, VertexSet::from_indices(n, s)));
    Ok(found)
}

/// First nonempty `S ⊆ U` (smallest first) with `sum alpha > |S| + |N(S)| - 1`.
pub fn check_condition_alpha(
    g: &Graph,
    b: &DegreeBounds,
    limit: usize,
) -> Result<Option<Certificate>, CertifyError> {
    first_violation(g, b, limit, Condition::Alpha)
}

/// First `S ⊆ U`, including the empty set, with `sum beta < ω(G - S) + |S| - 1`.
pub fn check_condition_beta(
    g: &Graph,
    b: &DegreeBounds,
    limit: usize,
) -> Result<Option<Certificate>, CertifyError> {
    first_violation(g, b, limit, Condition::Beta)
}
