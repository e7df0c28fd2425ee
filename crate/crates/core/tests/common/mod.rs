//! Brute-force ground truth computed straight from the definitions, sharing
//! no code with the library beyond the instance types.
#![allow(dead_code)]

use degtree::instance::{ConstraintEntry, InstanceFile};
use degtree::Instance;
use rand::seq::SliceRandom;
use rand::Rng;

/// Violating subset mask with its two sides.
pub type Violation = (u64, i64, i64);

/// A small instance with edge sets as bitmasks.
#[derive(Debug, Clone)]
pub struct Raw {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<i64>,
    /// `(v, alpha, beta)`, sorted by vertex.
    pub bounds: Vec<(usize, u32, u32)>,
}

impl Raw {
    pub fn from_file(f: &InstanceFile) -> Self {
        let mut bounds: Vec<_> = f
            .constrained
            .iter()
            .map(|c| (c.v as usize, c.alpha as u32, c.beta as u32))
            .collect();
        bounds.sort_unstable();
        Raw {
            n: f.n as usize,
            edges: f
                .edges
                .iter()
                .map(|e| (e[0] as usize, e[1] as usize))
                .collect(),
            weights: f.edges.iter().map(|e| e[2]).collect(),
            bounds,
        }
    }

    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            n: self.n as i64,
            edges: self
                .edges
                .iter()
                .zip(&self.weights)
                .map(|(&(u, v), &w)| [u as i64, v as i64, w])
                .collect(),
            constrained: self
                .bounds
                .iter()
                .map(|&(v, a, b)| ConstraintEntry {
                    v: v as i64,
                    alpha: i64::from(a),
                    beta: i64::from(b),
                })
                .collect(),
        }
    }

    pub fn instance(&self) -> Instance {
        self.to_file()
            .validate()
            .expect("generated instance is valid")
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.m()) - 1
    }

    /// Components of the graph on the vertices in `alive` using the edges in
    /// `mask` whose ends are both alive.
    pub fn components(&self, alive: u64, mask: u64) -> usize {
        let mut label: Vec<usize> = (0..self.n).collect();
        loop {
            let mut changed = false;
            for (i, &(u, v)) in self.edges.iter().enumerate() {
                if mask >> i & 1 == 1 && alive >> u & 1 == 1 && alive >> v & 1 == 1 {
                    let l = label[u].min(label[v]);
                    if label[u] != l || label[v] != l {
                        label[u] = l;
                        label[v] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..self.n)
            .filter(|&v| alive >> v & 1 == 1 && label[v] == v)
            .count()
    }

    pub fn all_vertices(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn r2(&self, mask: u64) -> usize {
        self.n - self.components(self.all_vertices(), mask)
    }

    pub fn degree_in(&self, mask: u64, v: usize) -> u32 {
        self.edges
            .iter()
            .enumerate()
            .filter(|&(i, &(a, b))| mask >> i & 1 == 1 && (a == v || b == v))
            .count() as u32
    }

    pub fn within_bounds(&self, mask: u64) -> bool {
        self.bounds.iter().all(|&(v, a, b)| {
            let d = self.degree_in(mask, v);
            a <= d && d <= b
        })
    }

    pub fn cost(&self, mask: u64) -> i64 {
        (0..self.m())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.weights[i])
            .sum()
    }

    /// All edge subsets of size `k`, as bitmasks in lexicographic index order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<u64> {
        let m = self.m();
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        if k > m {
            return out;
        }
        loop {
            out.push(idx.iter().fold(0u64, |acc, &i| acc | 1 << i));
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + m - k {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// True when the edges in `mask` form no cycle.
    pub fn acyclic(&self, mask: u64) -> bool {
        let mut root: Vec<usize> = (0..self.n).collect();
        fn top(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (top(&mut root, u), top(&mut root, v));
                if a == b {
                    return false;
                }
                root[a] = b;
            }
        }
        true
    }

    /// Every spanning tree: the acyclic edge sets of size `n - 1`.
    pub fn spanning_trees(&self) -> Vec<u64> {
        self.subsets_of_size(self.n - 1)
            .into_iter()
            .filter(|&s| self.acyclic(s))
            .collect()
    }

    /// Cheapest tree within the bounds: `(cost, sorted edge indices)`, ties to the lexicographically smallest.
    pub fn best_tree(&self) -> Option<(i64, Vec<usize>)> {
        self.spanning_trees()
            .into_iter()
            .filter(|&t| self.within_bounds(t))
            .map(|t| (self.cost(t), bits(t)))
            .min()
    }

    /// Bases of the degree-bounded partition matroid, from its basis definition.
    pub fn m1_bases(&self) -> Vec<u64> {
        self.subsets_of_size(self.n - 1)
            .into_iter()
            .filter(|&s| self.within_bounds(s))
            .collect()
    }

    pub fn constrained_mask(&self) -> u64 {
        self.bounds.iter().fold(0, |acc, &(v, _, _)| acc | 1 << v)
    }

    pub fn neighbours(&self, s: u64) -> u64 {
        let mut out = 0;
        for &(u, v) in &self.edges {
            if s >> u & 1 == 1 {
                out |= 1 << v;
            }
            if s >> v & 1 == 1 {
                out |= 1 << u;
            }
        }
        out & !s
    }

    /// Both sides of the lower-bound condition for `s`.
    pub fn alpha_sides(&self, s: u64) -> (i64, i64) {
        let lhs = self
            .bounds
            .iter()
            .filter(|b| s >> b.0 & 1 == 1)
            .map(|b| i64::from(b.1))
            .sum();
        let rhs = i64::from(s.count_ones()) + i64::from(self.neighbours(s).count_ones()) - 1;
        (lhs, rhs)
    }

    /// Both sides of the upper-bound condition for `s`.
    pub fn beta_sides(&self, s: u64) -> (i64, i64) {
        let lhs = self
            .bounds
            .iter()
            .filter(|b| s >> b.0 & 1 == 1)
            .map(|b| i64::from(b.2))
            .sum();
        let rest = self.components(self.all_vertices() & !s, self.full());
        let rhs = rest as i64 + i64::from(s.count_ones()) - 1;
        (lhs, rhs)
    }

    /// Subsets of U, smallest first, then lexicographic by sorted vertex list.
    pub fn subsets_of_u(&self) -> Vec<u64> {
        let u: Vec<usize> = self.bounds.iter().map(|b| b.0).collect();
        let mut all: Vec<Vec<usize>> = (0..1u64 << u.len())
            .map(|m| {
                (0..u.len())
                    .filter(|&i| m >> i & 1 == 1)
                    .map(|i| u[i])
                    .collect()
            })
            .collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        all.into_iter()
            .map(|s| s.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect()
    }

    /// First violation of each condition, in the canonical subset order.
    pub fn violations(&self) -> (Option<Violation>, Option<Violation>) {
        let subsets = self.subsets_of_u();
        let alpha = subsets.iter().filter(|&&s| s != 0).find_map(|&s| {
            let (l, r) = self.alpha_sides(s);
            (l > r).then_some((s, l, r))
        });
        let beta = subsets.iter().find_map(|&s| {
            let (l, r) = self.beta_sides(s);
            (l < r).then_some((s, l, r))
        });
        (alpha, beta)
    }

    pub fn conditions_hold(&self) -> bool {
        let (a, b) = self.violations();
        a.is_none() && b.is_none()
    }
}

pub fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(items: &[usize]) -> u64 {
    items.iter().fold(0, |acc, &i| acc | 1 << i)
}

/// `max |X ∩ B|` over the given bases; 0 when there are none.
pub fn rank_from_bases(bases: &[u64], x: u64) -> usize {
    bases
        .iter()
        .map(|&b| (b & x).count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub n: usize,
    pub edge_prob: f64,
    pub connected: bool,
    pub max_u: usize,
    pub bound_max: u32,
    pub weights: (i64, i64),
    pub max_edges: usize,
}

/// Random instance: optional random spanning tree, extra edges by coin
/// flips, a greedy random stable set, sorted bound pairs.
pub fn random_raw<R: Rng>(s: Shape, rng: &mut R) -> Raw {
    let n = s.n;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut has = vec![vec![false; n]; n];
    let mut add = |pairs: &mut Vec<(usize, usize)>, u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        if !has[a][b] {
            has[a][b] = true;
            pairs.push((a, b));
        }
    };
    if s.connected {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for i in 1..n {
            let j = rng.gen_range(0..i);
            add(&mut pairs, order[i], order[j]);
        }
    }
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    candidates.shuffle(rng);
    for (u, v) in candidates {
        if pairs.len() >= s.max_edges {
            break;
        }
        if rng.gen_bool(s.edge_prob) {
            add(&mut pairs, u, v);
        }
    }
    pairs.sort_unstable();

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let want = rng.gen_range(0..=s.max_u.min(n));
    let mut stable: Vec<usize> = Vec::new();
    for v in order {
        if stable.len() == want {
            break;
        }
        if stable
            .iter()
            .all(|&w| !pairs.contains(&(v.min(w), v.max(w))))
        {
            stable.push(v);
        }
    }
    stable.sort_unstable();
    let bounds = stable
        .into_iter()
        .map(|v| {
            let x = rng.gen_range(0..=s.bound_max);
            let y = rng.gen_range(0..=s.bound_max);
            (v, x.min(y), x.max(y))
        })
        .collect();
    let weights = pairs
        .iter()
        .map(|_| rng.gen_range(s.weights.0..=s.weights.1))
        .collect();
    Raw {
        n,
        edges: pairs,
        weights,
        bounds,
    }
}

/// Bounded vertices that attach only to a small hub set, with tight bounds.
/// The lower-bound condition is typically what fails on these.
pub fn crowded_raw<R: Rng>(rng: &mut R) -> Raw {
    let n = rng.gen_range(4..=7);
    let k = rng.gen_range(2..=3.min(n - 2));
    let hubs = rng.gen_range(1..=(n - k).min(3));
    let mut pairs = Vec::new();
    for u in 0..k {
        for h in k..k + hubs {
            if rng.gen_bool(0.7) || h == k {
                pairs.push((u, h));
            }
        }
    }
    // The rest hangs off the hubs, plus a few chords.
    for v in k + hubs..n {
        pairs.push((rng.gen_range(k..v), v));
    }
    for a in k..n {
        for b in a + 1..n {
            if !pairs.contains(&(a, b)) && rng.gen_bool(0.2) {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_unstable();
    let bounds = (0..k)
        .map(|u| {
            let d = pairs.iter().filter(|e| e.0 == u).count() as u32;
            let alpha = rng.gen_range(1..=d);
            (u, alpha, rng.gen_range(alpha..=d))
        })
        .collect();
    let weights = pairs.iter().map(|_| rng.gen_range(-5..=5)).collect();
    Raw {
        n,
        edges: pairs,
        weights,
        bounds,
    }
}
