use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The support `[i, j]` of the indecomposable `M[i, j]`, 1-based and inclusive.
///
/// The derived `Ord` is lexicographic on `(i, j)`. It is a linear extension of
/// the interval order, so sorting a chain by it sorts the chain ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    i: usize,
    j: usize,
}

impl Interval {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == 0 || i > j || j > n {
            return Err(Error::InvalidInterval { i, j, n });
        }
        Ok(Interval { i, j })
    }

    /// `P_a = M[a, n]`.
    pub fn projective(a: usize, n: usize) -> Result<Self> {
        Self::new(a, n, n)
    }

    /// `I_a = M[1, a]`.
    pub fn injective(a: usize, n: usize) -> Result<Self> {
        Self::new(1, a, n)
    }

    /// `S_a = M[a, a]`.
    pub fn simple(a: usize, n: usize) -> Result<Self> {
        Self::new(a, a, n)
    }

    pub fn start(&self) -> usize {
        self.i
    }

    pub fn end(&self) -> usize {
        self.j
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.i <= vertex && vertex <= self.j
    }

    pub fn len(&self) -> usize {
        self.j + 1 - self.i
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_projective(&self, n: usize) -> bool {
        self.j == n
    }

    pub fn is_injective(&self) -> bool {
        self.i == 1
    }

    /// Indicator vector of the support, of length `n`.
    pub fn dimension_vector(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|a| usize::from(self.contains(a))).collect()
    }

    pub fn leq(&self, other: &Interval) -> bool {
        interval_leq(self, other)
    }

    pub fn comparable(&self, other: &Interval) -> bool {
        self.leq(other) || other.leq(self)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

/// `[i, j] <= [k, l]` iff `i <= k` and `j <= l`.
pub fn interval_leq(p: &Interval, s: &Interval) -> bool {
    p.i <= s.i && p.j <= s.j
}

/// All subintervals of `[1, n]`, lexicographically.
pub fn all_intervals(n: usize) -> Vec<Interval> {
    (1..=n)
        .flat_map(|i| (i..=n).map(move |j| Interval { i, j }))
        .collect()
}
