use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use super::interval::Interval;
use crate::error::{Error, Result};

/// A vector of nonnegative integers indexed by the vertices `1..=n`.
///
/// Stored 0-based: `v[a - 1]` is the entry at vertex `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct DimVector(Vec<usize>);

impl DimVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DimVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    /// Entry at the 1-based vertex `a`; 0 outside `1..=n`.
    pub fn at(&self, a: usize) -> usize {
        if a == 0 {
            0
        } else {
            self.0.get(a - 1).copied().unwrap_or(0)
        }
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl Deref for DimVector {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for DimVector {
    fn from(v: Vec<usize>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `⊕ M[i,j]^{m_ij}` over the equioriented quiver `1 → 2 → … → n`.
///
/// Summands are a multiset keyed by distinct intervals; multiplicities are
/// always positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    n: usize,
    summands: BTreeMap<Interval, usize>,
}

impl Representation {
    pub fn zero(n: usize) -> Self {
        Representation {
            n,
            summands: BTreeMap::new(),
        }
    }

    pub fn from_summands<I>(n: usize, summands: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Interval, usize)>,
    {
        let mut rep = Self::zero(n);
        for (interval, mult) in summands {
            rep.add(interval, mult)?;
        }
        Ok(rep)
    }

    /// Convenience constructor from `(i, j, mult)` triples.
    pub fn from_triples(n: usize, triples: &[(usize, usize, usize)]) -> Result<Self> {
        let mut rep = Self::zero(n);
        for &(i, j, m) in triples {
            rep.add(Interval::new(i, j, n)?, m)?;
        }
        Ok(rep)
    }

    pub fn add(&mut self, interval: Interval, mult: usize) -> Result<()> {
        if interval.end() > self.n {
            return Err(Error::InvalidInterval {
                i: interval.start(),
                j: interval.end(),
                n: self.n,
            });
        }
        if mult == 0 {
            return Err(Error::ZeroMultiplicity {
                i: interval.start(),
                j: interval.end(),
            });
        }
        *self.summands.entry(interval).or_insert(0) += mult;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distinct summands with multiplicities, lexicographically by interval.
    pub fn summands(&self) -> impl Iterator<Item = (Interval, usize)> + '_ {
        self.summands.iter().map(|(&k, &m)| (k, m))
    }

    pub fn distinct(&self) -> impl Iterator<Item = Interval> + '_ {
        self.summands.keys().copied()
    }

    pub fn multiplicity(&self, interval: &Interval) -> usize {
        self.summands.get(interval).copied().unwrap_or(0)
    }

    pub fn num_distinct(&self) -> usize {
        self.summands.len()
    }

    /// Total number of indecomposable summands, counted with multiplicity.
    pub fn total_summands(&self) -> usize {
        self.summands.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn dimension_vector(&self) -> DimVector {
        dimension_vector(self)
    }

    pub fn is_projective(&self) -> bool {
        self.distinct().all(|iv| iv.is_projective(self.n))
    }

    pub fn is_injective(&self) -> bool {
        self.distinct().all(|iv| iv.is_injective())
    }

    /// `(i, j, mult)` triples in canonical order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        self.summands()
            .map(|(iv, m)| (iv.start(), iv.end(), m))
            .collect()
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (k, (iv, m)) in self.summands().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "M{iv}")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

pub fn dimension_vector(rep: &Representation) -> DimVector {
    let mut d = vec![0; rep.n];
    for (iv, m) in rep.summands() {
        for entry in &mut d[iv.start() - 1..iv.end()] {
            *entry += m;
        }
    }
    DimVector(d)
}

/// A representation paired with a dimension vector of the same length: the
/// data of one quiver Grassmannian `Gr_e(M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    rep: Representation,
    e: DimVector,
}

impl Instance {
    pub fn new(rep: Representation, e: DimVector) -> Result<Self> {
        if e.len() != rep.n() {
            return Err(Error::DimensionMismatch {
                expected: rep.n(),
                actual: e.len(),
            });
        }
        Ok(Instance { rep, e })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn e(&self) -> &DimVector {
        &self.e
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn d(&self) -> DimVector {
        self.rep.dimension_vector()
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr_{}({}) on n={}", self.e, self.rep, self.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_vector_examples() {
        let complexes = Representation::from_triples(2, &[(1, 1, 1), (1, 2, 1), (2, 2, 1)]).unwrap();
        assert_eq!(complexes.dimension_vector().as_slice(), &[2, 2]);
        assert_eq!(Representation::zero(3).dimension_vector().as_slice(), &[0, 0, 0]);
        let m = Representation::from_triples(2, &[(1, 2, 2), (1, 1, 1), (2, 2, 1)]).unwrap();
        assert_eq!(m.dimension_vector().as_slice(), &[3, 3]);
    }

    #[test]
    fn duplicate_intervals_merge() {
        let m = Representation::from_triples(2, &[(1, 2, 1), (1, 2, 2)]).unwrap();
        assert_eq!(m.num_distinct(), 1);
        assert_eq!(m.total_summands(), 3);
    }

    #[test]
    fn rejects_zero_multiplicity_and_out_of_range() {
        assert!(Representation::from_triples(2, &[(1, 2, 0)]).is_err());
        assert!(Representation::from_triples(2, &[(1, 3, 1)]).is_err());
        let mut m = Representation::zero(2);
        assert!(m.add(Interval::new(1, 3, 3).unwrap(), 1).is_err());
    }

    #[test]
    fn instance_length_checked() {
        let m = Representation::zero(2);
        assert!(Instance::new(m.clone(), DimVector::new(vec![0])).is_err());
        assert!(Instance::new(m, DimVector::new(vec![0, 0])).is_ok());
    }
}
