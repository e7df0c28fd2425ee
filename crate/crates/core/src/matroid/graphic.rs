use super::{ExchangeView, MatroidOracle};
use crate::dsu::DisjointSet;
use crate::graph::Graph;
use crate::sets::EdgeSet;

/// Cycle matroid of a graph: independent sets are the forests.
#[derive(Debug, Clone, Copy)]
pub struct GraphicMatroid<'g> {
    graph: &'g Graph,
}

impl<'g> GraphicMatroid<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self { graph }
    }
}

impl MatroidOracle for GraphicMatroid<'_> {
    fn ground_size(&self) -> usize {
        self.graph.edge_count()
    }

    fn rank(&self, x: &EdgeSet) -> usize {
        self.graph.vertex_count() - self.graph.component_count_spanning(x)
    }

    fn is_independent(&self, x: &EdgeSet) -> bool {
        let mut dsu = DisjointSet::new(self.graph.vertex_count());
        x.iter().all(|e| {
            let (u, v) = self.graph.endpoints(e);
            dsu.union(u, v)
        })
    }

    fn exchange_view<'a>(&'a self, base: &EdgeSet) -> Box<dyn ExchangeView + 'a> {
        Box::new(ForestExchange::new(self.graph, base))
    }
}

/// Exchange queries against a forest: `x` can replace `y` iff `x` joins two
/// trees or `y` lies on the tree path between the endpoints of `x`.
struct ForestExchange {
    /// Fundamental cycle (tree path) for every non-forest edge closing a cycle.
    cycles: Vec<Option<EdgeSet>>,
}

impl ForestExchange {
    fn new(g: &Graph, forest: &EdgeSet) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut parent = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut component = vec![usize::MAX; n];
        let mut stack = Vec::new();
        for root in 0..n {
            if component[root] != usize::MAX {
                continue;
            }
            component[root] = root;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &(w, e) in g.incident(v) {
                    if forest.contains(e) && component[w] == usize::MAX {
                        component[w] = root;
                        parent[w] = v;
                        parent_edge[w] = e;
                        depth[w] = depth[v] + 1;
                        stack.push(w);
                    }
                }
            }
        }

        let mut cycles = vec![None; m];
        for (e, cycle) in cycles.iter_mut().enumerate() {
            if forest.contains(e) {
                continue;
            }
            let (mut a, mut b) = g.endpoints(e);
            if component[a] != component[b] {
                continue;
            }
            let mut path = EdgeSet::new(m);
            while a != b {
                if depth[a] < depth[b] {
                    std::mem::swap(&mut a, &mut b);
                }
                path.insert(parent_edge[a]);
                a = parent[a];
            }
            *cycle = Some(path);
        }

        Self { cycles }
    }
}

impl ExchangeView for ForestExchange {
    fn can_add(&self, x: usize) -> bool {
        self.cycles[x].is_none()
    }

    fn can_swap(&self, y: usize, x: usize) -> bool {
        match &self.cycles[x] {
            None => true,
            Some(path) => path.contains(y),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::matroid::OracleExchange;

    #[test]
    fn rank_examples() {
        let t = triangle();
        let m = GraphicMatroid::new(&t);
        assert_eq!(m.rank(&EdgeSet::new(3)), 0);
        assert_eq!(m.rank(&EdgeSet::full(3)), 2);
        let h = two_triangles_apex();
        let m = GraphicMatroid::new(&h);
        assert_eq!(m.rank(&EdgeSet::from_indices(8, 0..6)), 4);
    }

    #[test]
    fn independence_examples() {
        let t = triangle();
        let m = GraphicMatroid::new(&t);
        assert!(m.is_independent(&EdgeSet::new(3)));
        assert!(!m.is_independent(&EdgeSet::full(3)));
        let p = path(5);
        assert!(GraphicMatroid::new(&p).is_independent(&EdgeSet::full(4)));
    }

    #[test]
    fn forest_exchange_agrees_with_independence() {
        let g = complete(6);
        let m = GraphicMatroid::new(&g);
        // Two trees: {0,1,2} via edges (0,1),(1,2) and {3,4} via (3,4).
        let idx = |u: usize, v: usize| g.edges().iter().position(|&p| p == (u, v)).unwrap();
        let base = EdgeSet::from_indices(15, [idx(0, 1), idx(1, 2), idx(3, 4)]);
        let fast = m.exchange_view(&base);
        let slow = OracleExchange {
            oracle: &m,
            base: base.clone(),
        };
        for x in (0..15).filter(|x| !base.contains(*x)) {
            assert_eq!(fast.can_add(x), slow.can_add(x), "add {x}");
            for y in base.iter() {
                assert_eq!(fast.can_swap(y, x), slow.can_swap(y, x), "swap {y} {x}");
            }
        }
    }
}
