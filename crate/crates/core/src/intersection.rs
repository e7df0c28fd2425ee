//! Two-matroid intersection over oracles.
//!
//! Cardinality intersection augments along shortest source-sink paths of the
//! exchange graph found by breadth-first search. Weighted intersection runs
//! successive shortest paths with node costs `+w(x)` for entering and `-w(y)`
//! for leaving elements, minimizing `(total cost, node count)` with a
//! label-correcting search. Among optimal paths the lexicographically
//! smallest element sequence is taken, so results are deterministic.
//!
//! When the target size is unreachable the engine returns a set `X` with
//! `r1(X) + r2(E \ X) = |I|`, which certifies that `I` is maximum.

use crate::matroid::{ExchangeView, MatroidOracle};
use crate::sets::EdgeSet;
use std::cmp::Ordering;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("ground sizes differ: {0} vs {1}")]
    GroundSizeMismatch(usize, usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("total cost overflows a 64-bit integer")]
    CostOverflow,
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

/// Outcome of an intersection run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionResult {
    /// Common independent set of both matroids.
    pub common_set: EdgeSet,
    /// Present only when the target was not reached: `r1(X) + r2(E \ X)`
    /// equals `common_set.len()`.
    pub minimizer: Option<EdgeSet>,
    /// Number of augmentations performed.
    pub rounds: usize,
}

impl IntersectionResult {
    pub fn size(&self) -> usize {
        self.common_set.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedResult {
    pub result: IntersectionResult,
    pub cost: i64,
}

/// Result of one augmentation attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AugmentOutcome {
    Augmented(EdgeSet),
    /// No source-sink path; `reachable` holds the elements reachable from the sources.
    NoPath {
        reachable: EdgeSet,
    },
}

/// Directed exchange graph for a common independent set `I`.
///
/// Arcs `y -> x` when `I - y + x` is independent in the first matroid and
/// `x -> y` when it is independent in the second (`y` in `I`, `x` not).
/// Sources are the `x` with `I + x` independent in the first matroid,
/// sinks those with `I + x` independent in the second.
struct ExchangeGraph {
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    source: Vec<bool>,
    sink: Vec<bool>,
}

impl ExchangeGraph {
    fn build(current: &EdgeSet, v1: &dyn ExchangeView, v2: &dyn ExchangeView) -> Self {
        let m = current.universe();
        let mut out = vec![Vec::new(); m];
        let mut inc = vec![Vec::new(); m];
        let mut source = vec![false; m];
        let mut sink = vec![false; m];
        let inside: Vec<usize> = current.iter().collect();
        for x in (0..m).filter(|&x| !current.contains(x)) {
            source[x] = v1.can_add(x);
            sink[x] = v2.can_add(x);
            for &y in &inside {
                if v1.can_swap(y, x) {
                    out[y].push(x);
                    inc[x].push(y);
                }
                if v2.can_swap(y, x) {
                    out[x].push(y);
                    inc[y].push(x);
                }
            }
        }
        // Adjacency sorted by index for deterministic tie-breaking.
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
        }
        Self {
            out,
            inc,
            source,
            sink,
        }
    }

    fn len(&self) -> usize {
        self.out.len()
    }

    fn reachable_from_sources(&self) -> EdgeSet {
        let mut seen = EdgeSet::new(self.len());
        let mut queue: VecDeque<usize> = VecDeque::new();
        for s in (0..self.len()).filter(|&s| self.source[s]) {
            seen.insert(s);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.out[v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Path labels to the sinks: `(cost, nodes)` of the best path starting
    /// at each node, with node costs included. `None` when no sink is reachable.
    fn labels_to_sink(&self, cost: Option<&[i128]>) -> Result<Vec<Option<Label>>, EngineError> {
        let m = self.len();
        let node_cost = |v: usize| cost.map_or(0, |c| c[v]);
        let mut label: Vec<Option<Label>> = vec![None; m];
        let mut queue = VecDeque::new();
        let mut queued = vec![false; m];
        for t in (0..m).filter(|&t| self.sink[t]) {
            label[t] = Some(Label {
                cost: node_cost(t),
                nodes: 1,
            });
            queue.push_back(t);
            queued[t] = true;
        }
        // With zero costs FIFO order makes this a plain breadth-first search.
        while let Some(u) = queue.pop_front() {
            queued[u] = false;
            let lu = label[u].expect("queued nodes are labelled");
            for &v in &self.inc[u] {
                let cand = Label {
                    cost: lu.cost + node_cost(v),
                    nodes: lu.nodes + 1,
                };
                if label[v].is_none_or(|lv| cand < lv) {
                    if cand.nodes > m {
                        return Err(EngineError::InternalInvariantBroken(
                            "negative cycle in exchange graph".into(),
                        ));
                    }
                    label[v] = Some(cand);
                    if !queued[v] {
                        queued[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(label)
    }

    /// Lexicographically smallest optimal source-sink path.
    fn best_path(&self, cost: Option<&[i128]>) -> Result<Option<Vec<usize>>, EngineError> {
        let label = self.labels_to_sink(cost)?;
        let node_cost = |v: usize| cost.map_or(0, |c| c[v]);
        let best = (0..self.len())
            .filter(|&s| self.source[s])
            .filter_map(|s| label[s].map(|l| (l, s)))
            .min();
        let Some((_, start)) = best else {
            return Ok(None);
        };
        let mut path = vec![start];
        let mut cur = start;
        loop {
            let here = label[cur].expect("path stays on labelled nodes");
            if self.sink[cur] && here.nodes == 1 {
                break;
            }
            let next = self.out[cur].iter().copied().find(|&u| {
                label[u].is_some_and(|lu| {
                    lu.cost + node_cost(cur) == here.cost && lu.nodes + 1 == here.nodes
                })
            });
            match next {
                Some(u) => {
                    path.push(u);
                    cur = u;
                }
                None => {
                    return Err(EngineError::InternalInvariantBroken(
                        "shortest-path labels are inconsistent".into(),
                    ))
                }
            }
        }
        Ok(Some(path))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Label {
    cost: i128,
    nodes: usize,
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.cost, self.nodes).cmp(&(other.cost, other.nodes))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_ground<M1: MatroidOracle, M2: MatroidOracle>(
    m1: &M1,
    m2: &M2,
) -> Result<usize, EngineError> {
    let (a, b) = (m1.ground_size(), m2.ground_size());
    if a != b {
        return Err(EngineError::GroundSizeMismatch(a, b));
    }
    Ok(a)
}

fn augment_with<M1: MatroidOracle, M2: MatroidOracle>(
    current: &EdgeSet,
    m1: &M1,
    m2: &M2,
    cost: Option<&[i128]>,
) -> Result<AugmentOutcome, EngineError> {
    let v1 = m1.exchange_view(current);
    let v2 = m2.exchange_view(current);
    let graph = ExchangeGraph::build(current, v1.as_ref(), v2.as_ref());
    match graph.best_path(cost)? {
        Some(path) => {
            let mut next = current.clone();
            for e in path {
                if !next.remove(e) {
                    next.insert(e);
                }
            }
            Ok(AugmentOutcome::Augmented(next))
        }
        None => Ok(AugmentOutcome::NoPath {
            reachable: graph.reachable_from_sources(),
        }),
    }
}

/// One cardinality augmentation along a shortest exchange path.
///
/// `current` must be independent in both matroids.
pub fn augment_step<M1: MatroidOracle, M2: MatroidOracle>(
    current: &EdgeSet,
    m1: &M1,
    m2: &M2,
) -> Result<AugmentOutcome, EngineError> {
    check_ground(m1, m2)?;
    augment_with(current, m1, m2, None)
}

/// Derives `X` with `r1(X) + r2(E \ X) = |I|` from the elements reachable
/// from the sources in the final exchange graph, checking both orientations.
fn recover_minimizer<M1: MatroidOracle, M2: MatroidOracle>(
    m1: &M1,
    m2: &M2,
    size: usize,
    reachable: &EdgeSet,
) -> Result<EdgeSet, EngineError> {
    let unreachable = reachable.complement();
    for x in [unreachable, reachable.clone()] {
        if m1.rank(&x) + m2.rank(&x.complement()) == size {
            return Ok(x);
        }
    }
    Err(EngineError::InternalInvariantBroken(format!(
        "no minimizer of value {size} from the final reachable set"
    )))
}

fn finish<M1: MatroidOracle, M2: MatroidOracle>(
    m1: &M1,
    m2: &M2,
    common_set: EdgeSet,
    rounds: usize,
    reachable: Option<EdgeSet>,
) -> Result<IntersectionResult, EngineError> {
    if !m1.is_independent(&common_set) || !m2.is_independent(&common_set) {
        return Err(EngineError::InternalInvariantBroken(
            "returned set is not common independent".into(),
        ));
    }
    let minimizer = match reachable {
        Some(r) => Some(recover_minimizer(m1, m2, common_set.len(), &r)?),
        None => None,
    };
    Ok(IntersectionResult {
        common_set,
        minimizer,
        rounds,
    })
}

fn run<M1: MatroidOracle, M2: MatroidOracle>(
    m1: &M1,
    m2: &M2,
    target: usize,
    cost: Option<&[i128]>,
) -> Result<IntersectionResult, EngineError> {
    let m = check_ground(m1, m2)?;
    let mut current = EdgeSet::new(m);
    let mut rounds = 0;
    while current.len() < target {
        match augment_with(&current, m1, m2, cost)? {
            AugmentOutcome::Augmented(next) => {
                if next.len() != current.len() + 1 {
                    return Err(EngineError::InternalInvariantBroken(
                        "augmentation did not grow the set by one".into(),
                    ));
                }
                current = next;
                rounds += 1;
            }
            AugmentOutcome::NoPath { reachable } => {
                return finish(m1, m2, current, rounds, Some(reachable));
            }
        }
    }
    finish(m1, m2, current, rounds, None)
}

/// Maximum-cardinality common independent set, stopping once `target` is reached.
pub fn max_common_independent<M1: MatroidOracle, M2: MatroidOracle>(
    m1: &M1,
    m2: &M2,
    target: usize,
) -> Result<IntersectionResult, EngineError> {
    run(m1, m2, target, None)
}

/// Minimum-weight common independent set of size `target`, or a maximum
/// one together with a minimizer when `target` is out of reach.
pub fn min_weight_common_basis<M1: MatroidOracle, M2: MatroidOracle>(
    m1: &M1,
    m2: &M2,
    weights: &[i64],
    target: usize,
) -> Result<WeightedResult, EngineError> {
    let m = check_ground(m1, m2)?;
    if weights.len() != m {
        return Err(EngineError::WeightCount {
            expected: m,
            got: weights.len(),
        });
    }
    // Entering elements are the ones outside the current set; the sign flip
    // for leaving elements is applied per round.
    let mut current_cost: Vec<i128> = weights.iter().map(|&w| i128::from(w)).collect();
    let mut current = EdgeSet::new(m);
    let mut rounds = 0;
    let mut reachable = None;
    while current.len() < target {
        for (e, c) in current_cost.iter_mut().enumerate() {
            let w = i128::from(weights[e]);
            *c = if current.contains(e) { -w } else { w };
        }
        match augment_with(&current, m1, m2, Some(&current_cost))? {
            AugmentOutcome::Augmented(next) => {
                current = next;
                rounds += 1;
            }
            AugmentOutcome::NoPath { reachable: r } => {
                reachable = Some(r);
                break;
            }
        }
    }
    let result = finish(m1, m2, current, rounds, reachable)?;
    let cost = result
        .common_set
        .iter()
        .try_fold(0i64, |acc, e| acc.checked_add(weights[e]))
        .ok_or(EngineError::CostOverflow)?;
    Ok(WeightedResult { result, cost })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Graph;
    use crate::matroid::{DegreeBounds, GraphicMatroid, PartitionMatroid};

    fn pair(g: &Graph, bounds: &[(usize, u32, u32)]) -> PartitionMatroid {
        let b = DegreeBounds::new(g, bounds).unwrap();
        PartitionMatroid::new(g, &b).unwrap()
    }

    fn minmax_value(m1: &impl MatroidOracle, m2: &impl MatroidOracle, x: &EdgeSet) -> usize {
        m1.rank(x) + m2.rank(&x.complement())
    }

    /// Brute-force `min_X r1(X) + r2(E \ X)`.
    fn brute_minmax(m1: &impl MatroidOracle, m2: &impl MatroidOracle) -> usize {
        let m = m1.ground_size();
        (0u32..1 << m)
            .map(|mask| {
                let x = EdgeSet::from_indices(m, (0..m).filter(|&i| mask >> i & 1 == 1));
                minmax_value(m1, m2, &x)
            })
            .min()
            .unwrap()
    }

    #[test]
    fn slack_path_reaches_target() {
        let g = path(3);
        let m1 = pair(&g, &[(1, 0, 2)]);
        let m2 = GraphicMatroid::new(&g);
        let r = max_common_independent(&m1, &m2, 2).unwrap();
        assert_eq!(r.common_set.to_vec(), vec![0, 1]);
        assert!(r.minimizer.is_none());
        assert_eq!(r.rounds, 2);
    }

    #[test]
    fn two_triangles_apex_falls_short() {
        let g = two_triangles_apex();
        let m1 = pair(&g, &[(0, 0, 1)]);
        let m2 = GraphicMatroid::new(&g);
        assert_eq!(brute_minmax(&m1, &m2), 5);
        let r = max_common_independent(&m1, &m2, 6).unwrap();
        assert_eq!(r.size(), 5);
        let x = r.minimizer.unwrap();
        assert_eq!(minmax_value(&m1, &m2, &x), 5);
        // The cut of the apex is one valid minimizer as well.
        let cut = EdgeSet::from_indices(8, [6, 7]);
        assert_eq!(m1.rank_terms(&cut), (6, 1));
        assert_eq!(minmax_value(&m1, &m2, &cut), 5);
    }

    #[test]
    fn double_neighbor_falls_short() {
        let g = double_neighbor();
        let m1 = pair(&g, &[(0, 2, 2), (1, 2, 2)]);
        let m2 = GraphicMatroid::new(&g);
        assert_eq!(brute_minmax(&m1, &m2), 3);
        let r = max_common_independent(&m1, &m2, 4).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(minmax_value(&m1, &m2, r.minimizer.as_ref().unwrap()), 3);
        let x = EdgeSet::from_indices(5, [4]);
        assert_eq!(m1.rank_terms(&x).0, 0);
        assert_eq!(minmax_value(&m1, &m2, &x), 3);
    }

    #[test]
    fn augment_step_examples() {
        let g = path(3);
        let m1 = pair(&g, &[(1, 0, 2)]);
        let m2 = GraphicMatroid::new(&g);
        match augment_step(&EdgeSet::new(2), &m1, &m2).unwrap() {
            AugmentOutcome::Augmented(s) => assert_eq!(s.len(), 1),
            other => panic!("{other:?}"),
        }
        match augment_step(&EdgeSet::from_indices(2, [0]), &m1, &m2).unwrap() {
            AugmentOutcome::Augmented(s) => assert_eq!(s.to_vec(), vec![0, 1]),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            augment_step(&EdgeSet::full(2), &m1, &m2).unwrap(),
            AugmentOutcome::NoPath { .. }
        ));
    }

    fn k4_weights() -> Vec<i64> {
        // Edge order of `complete(4)`: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
        vec![1, 2, 3, 4, 5, 6]
    }

    #[test]
    fn k4_weighted_with_degree_cap() {
        let g = complete(4);
        let m1 = pair(&g, &[(0, 0, 1)]);
        let m2 = GraphicMatroid::new(&g);
        let r = min_weight_common_basis(&m1, &m2, &k4_weights(), 3).unwrap();
        assert_eq!(r.cost, 10);
        assert_eq!(r.result.common_set.to_vec(), vec![0, 3, 4]);
    }

    #[test]
    fn k4_unconstrained_is_mst() {
        let g = complete(4);
        let m1 = PartitionMatroid::new(&g, &DegreeBounds::none(4)).unwrap();
        let m2 = GraphicMatroid::new(&g);
        let r = min_weight_common_basis(&m1, &m2, &k4_weights(), 3).unwrap();
        assert_eq!(r.cost, 6);
        assert_eq!(r.result.common_set.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn uniform_weights_cost_is_target_times_weight() {
        let g = complete(5);
        let m1 = pair(&g, &[(0, 1, 2)]);
        let m2 = GraphicMatroid::new(&g);
        let r = min_weight_common_basis(&m1, &m2, &[7; 10], 4).unwrap();
        assert_eq!(r.cost, 28);
    }

    #[test]
    fn negative_weights_are_fine() {
        let g = complete(4);
        let m1 = pair(&g, &[(0, 0, 1)]);
        let m2 = GraphicMatroid::new(&g);
        let w: Vec<i64> = k4_weights().iter().map(|w| -w).collect();
        let r = min_weight_common_basis(&m1, &m2, &w, 3).unwrap();
        // Heaviest tree with vertex 0 a leaf: (2,3),(1,3) plus (0,3).
        assert_eq!(r.cost, -14);
    }

    #[test]
    fn overflow_is_reported() {
        let g = path(3);
        let m1 = PartitionMatroid::new(&g, &DegreeBounds::none(3)).unwrap();
        let m2 = GraphicMatroid::new(&g);
        assert_eq!(
            min_weight_common_basis(&m1, &m2, &[i64::MAX, 1], 2),
            Err(EngineError::CostOverflow)
        );
    }

    #[test]
    fn empty_ground_set() {
        let g = Graph::new(3, &[]).unwrap();
        let m1 =
            PartitionMatroid::new(&Graph::new(1, &[]).unwrap(), &DegreeBounds::none(1)).unwrap();
        let m2 = GraphicMatroid::new(&g);
        let r = max_common_independent(&m1, &m2, 2).unwrap();
        assert_eq!(r.size(), 0);
        assert!(r.minimizer.unwrap().is_empty());
    }

    /// Uniform matroid of rank k, to exercise the engine off graphs.
    struct Uniform {
        m: usize,
        k: usize,
    }

    impl MatroidOracle for Uniform {
        fn ground_size(&self) -> usize {
            self.m
        }
        fn rank(&self, x: &EdgeSet) -> usize {
            x.len().min(self.k)
        }
    }

    /// Partition matroid: at most one element from each block.
    struct Blocks(Vec<usize>);

    impl MatroidOracle for Blocks {
        fn ground_size(&self) -> usize {
            self.0.len()
        }
        fn rank(&self, x: &EdgeSet) -> usize {
            let mut seen: Vec<usize> = x.iter().map(|e| self.0[e]).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        }
    }

    #[test]
    fn generic_matroids_bipartite_matching() {
        // Elements are edges of a bipartite graph left->right; matching =
        // common independent set of the two block matroids.
        let left = Blocks(vec![0, 0, 1, 1, 2]);
        let right = Blocks(vec![0, 1, 0, 1, 1]);
        let r = max_common_independent(&left, &right, 3).unwrap();
        assert_eq!(r.size(), 2);
        assert_eq!(brute_minmax(&left, &right), 2);
        let x = r.minimizer.unwrap();
        assert_eq!(left.rank(&x) + right.rank(&x.complement()), 2);

        let u = Uniform { m: 5, k: 3 };
        let r = max_common_independent(&u, &left, 5).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(brute_minmax(&u, &left), 3);
    }

    #[test]
    fn weighted_generic_assignment() {
        let left = Blocks(vec![0, 0, 1, 1]);
        let right = Blocks(vec![0, 1, 0, 1]);
        // Assignment costs: (0,0)=4 (0,1)=1 (1,0)=2 (1,1)=7.
        let r = min_weight_common_basis(&left, &right, &[4, 1, 2, 7], 2).unwrap();
        assert_eq!(r.cost, 3);
        assert_eq!(r.result.common_set.to_vec(), vec![1, 2]);
    }
}
