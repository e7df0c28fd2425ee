//! Matroid oracles over a ground set of edge indices.
//!
//! The intersection engine only talks to [`MatroidOracle`]. Concrete
//! matroids may override [`MatroidOracle::exchange_view`] with a faster
//! answer to the two questions the exchange graph asks about a fixed
//! independent set `I`: is `I + x` independent, and is `I - y + x`?

mod graphic;
mod partition;

pub use graphic::GraphicMatroid;
pub use partition::{
    BoundsError, DegreeBounds, FailureKind, PartitionMatroid, WellDefinednessFailure,
};

use crate::sets::EdgeSet;

pub trait MatroidOracle {
    fn ground_size(&self) -> usize;

    fn rank(&self, x: &EdgeSet) -> usize;

    fn is_independent(&self, x: &EdgeSet) -> bool {
        self.rank(x) == x.len()
    }

    /// Exchange queries relative to the independent set `base`.
    fn exchange_view<'a>(&'a self, base: &EdgeSet) -> Box<dyn ExchangeView + 'a> {
        Box::new(OracleExchange {
            oracle: self,
            base: base.clone(),
        })
    }
}

/// Single-element exchange queries against a fixed independent set `I`.
pub trait ExchangeView {
    /// `I + x` is independent (`x` not in `I`).
    fn can_add(&self, x: usize) -> bool;

    /// `I - y + x` is independent (`y` in `I`, `x` not in `I`).
    fn can_swap(&self, y: usize, x: usize) -> bool;
}

/// Answers exchange queries with plain independence calls.
pub struct OracleExchange<'a, M: ?Sized> {
    oracle: &'a M,
    base: EdgeSet,
}

impl<M: MatroidOracle + ?Sized> ExchangeView for OracleExchange<'_, M> {
    fn can_add(&self, x: usize) -> bool {
        let mut s = self.base.clone();
        s.insert(x);
        self.oracle.is_independent(&s)
    }

    fn can_swap(&self, y: usize, x: usize) -> bool {
        let mut s = self.base.clone();
        s.remove(y);
        s.insert(x);
        self.oracle.is_independent(&s)
    }
}

impl<M: MatroidOracle + ?Sized> MatroidOracle for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn rank(&self, x: &EdgeSet) -> usize {
        (**self).rank(x)
    }

    fn is_independent(&self, x: &EdgeSet) -> bool {
        (**self).is_independent(x)
    }

    fn exchange_view<'a>(&'a self, base: &EdgeSet) -> Box<dyn ExchangeView + 'a> {
        (**self).exchange_view(base)
    }
}
