use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::representation::{DimVector, Instance, Representation};

/// Outcome of the catenoid test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Catenoid {
    /// The distinct summands, ascending in the interval order.
    Chain(Vec<Interval>),
    /// Two distinct summands neither of which is below the other.
    Incomparable(Interval, Interval),
}

impl Catenoid {
    pub fn is_chain(&self) -> bool {
        matches!(self, Catenoid::Chain(_))
    }
}

/// Decides whether the distinct summands of `m` are totally ordered.
///
/// Lexicographic order extends the interval order, so it is enough to test
/// neighbours in lexicographic order. The witness is reported with the
/// summand of smaller end point first.
pub fn is_catenoid(m: &Representation) -> Catenoid {
    let distinct: Vec<Interval> = m.distinct().collect();
    for w in distinct.windows(2) {
        if !w[0].leq(&w[1]) {
            return Catenoid::Incomparable(w[1], w[0]);
        }
    }
    Catenoid::Chain(distinct)
}

/// Dimension vectors of the minimal projective resolution `0 → Q → R → M → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub q: DimVector,
    pub r: DimVector,
}

/// Each summand `M[i,j]` contributes `P_i` to `R` and, when `j < n`,
/// `P_{j+1}` to `Q`.
pub fn minimal_resolution(m: &Representation) -> Resolution {
    let n = m.n();
    let mut r = vec![0; n];
    let mut q = vec![0; n];
    for (iv, mult) in m.summands() {
        for a in iv.start()..=n {
            r[a - 1] += mult;
        }
        for a in iv.end() + 1..=n {
            q[a - 1] += mult;
        }
    }
    Resolution {
        q: q.into(),
        r: r.into(),
    }
}

/// `e <= dim M` and `f = e + q` weakly increasing.
pub fn nonempty(inst: &Instance) -> bool {
    let d = inst.d();
    let e = inst.e();
    if e.iter().zip(d.iter()).any(|(x, y)| x > y) {
        return false;
    }
    let Resolution { q, .. } = minimal_resolution(inst.rep());
    let f: Vec<usize> = e.iter().zip(q.iter()).map(|(x, y)| x + y).collect();
    DimVector::new(f).is_weakly_increasing()
}

/// `0 < e_a < d_a` for all `a`, and `r_a > q_{a+1}` for all `a < n`.
pub fn is_simple(inst: &Instance) -> bool {
    let d = inst.d();
    let e = inst.e();
    if e.iter().zip(d.iter()).any(|(&x, &y)| x == 0 || x >= y) {
        return false;
    }
    let Resolution { q, r } = minimal_resolution(inst.rep());
    (0..inst.n().saturating_sub(1)).all(|a| r[a] > q[a + 1])
}
