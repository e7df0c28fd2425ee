//! Seeded random instance generation.

use crate::instance::{ConstraintEntry, InstanceFile};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeSpec {
    /// Exactly this many edges.
    Count(usize),
    /// Each vertex pair independently with this probability.
    Probability(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub n: usize,
    pub edges: EdgeSpec,
    pub stable_size: usize,
    pub alpha_max: u32,
    pub beta_max: u32,
    pub weight_range: (i64, i64),
    pub seed: u64,
    pub connected: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            n: 6,
            edges: EdgeSpec::Probability(0.5),
            stable_size: 2,
            alpha_max: 2,
            beta_max: 3,
            weight_range: (0, 10),
            seed: 0,
            connected: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("n must be at least 1")]
    NoVertices,
    #[error("stable-size {requested} exceeds n = {n}")]
    StableTooLarge { requested: usize, n: usize },
    #[error("m = {m} exceeds the {max} possible edges on {n} vertices")]
    TooManyEdges { m: usize, max: usize, n: usize },
    #[error("a connected graph on {n} vertices needs at least {min} edges, got m = {m}")]
    TooFewEdges { m: usize, min: usize, n: usize },
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("weight range {0}..{1} is empty")]
    BadWeightRange(i64, i64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub instance: InstanceFile,
    /// Size of the stable set actually drawn; smaller than requested when
    /// the greedy draw ran out of candidates.
    pub stable_size: usize,
}

/// Draws an instance. Identical parameters give identical output.
pub fn generate(p: &GenParams) -> Result<Generated, GenError> {
    let n = p.n;
    if n == 0 {
        return Err(GenError::NoVertices);
    }
    if p.stable_size > n {
        return Err(GenError::StableTooLarge {
            requested: p.stable_size,
            n,
        });
    }
    let (wlo, whi) = p.weight_range;
    if wlo > whi {
        return Err(GenError::BadWeightRange(wlo, whi));
    }
    let max_edges = n * (n - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);

    let mut present = vec![false; max_edges];
    let pair_index = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        a * (2 * n - a - 1) / 2 + (b - a - 1)
    };
    let mut count = 0;
    if p.connected && n > 1 {
        // Random spanning tree: attach each vertex of a shuffled order to an earlier one.
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        for i in 1..n {
            let j = rng.gen_range(0..i);
            present[pair_index(order[i], order[j])] = true;
            count += 1;
        }
    }
    match p.edges {
        EdgeSpec::Count(m) => {
            if m > max_edges {
                return Err(GenError::TooManyEdges {
                    m,
                    max: max_edges,
                    n,
                });
            }
            if p.connected && m < n - 1 {
                return Err(GenError::TooFewEdges { m, min: n - 1, n });
            }
            let mut rest: Vec<usize> = (0..max_edges).filter(|&i| !present[i]).collect();
            rest.shuffle(&mut rng);
            for i in rest.into_iter().take(m - count) {
                present[i] = true;
            }
        }
        EdgeSpec::Probability(q) => {
            if !(0.0..=1.0).contains(&q) {
                return Err(GenError::BadProbability(q));
            }
            for slot in present.iter_mut() {
                if rng.gen_bool(q) {
                    *slot = true;
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if present[pair_index(u, v)] {
                pairs.push((u, v));
            }
        }
    }

    // Greedy stable set: repeatedly take a vertex of least remaining degree,
    // ties broken by a random priority, and drop its neighbours.
    let mut adjacent = vec![Vec::new(); n];
    for &(u, v) in &pairs {
        adjacent[u].push(v);
        adjacent[v].push(u);
    }
    let mut priority: Vec<usize> = (0..n).collect();
    priority.shuffle(&mut rng);
    let mut degree: Vec<usize> = adjacent.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut stable = Vec::new();
    while stable.len() < p.stable_size {
        let Some(v) = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], priority[v]))
        else {
            break;
        };
        stable.push(v);
        let mut removed = vec![v];
        removed.extend(adjacent[v].iter().copied().filter(|&w| alive[w]));
        for &x in &removed {
            alive[x] = false;
        }
        for &x in &removed {
            for &y in &adjacent[x] {
                if alive[y] {
                    degree[y] -= 1;
                }
            }
        }
    }
    stable.sort_unstable();

    let constrained = stable
        .iter()
        .map(|&v| {
            let alpha = rng.gen_range(0..=p.alpha_max);
            let beta = rng.gen_range(alpha..=p.beta_max.max(alpha));
            ConstraintEntry {
                v: v as i64,
                alpha: i64::from(alpha),
                beta: i64::from(beta),
            }
        })
        .collect();
    let edges = pairs
        .iter()
        .map(|&(u, v)| [u as i64, v as i64, rng.gen_range(wlo..=whi)])
        .collect();
    Ok(Generated {
        stable_size: stable.len(),
        instance: InstanceFile {
            n: n as i64,
            edges,
            constrained,
        },
    })
}
