//! Splitting a quiver Grassmannian into a product of simple ones.

use std::fmt;

use super::interval::Interval;
use super::representation::{DimVector, Instance, Representation};
use super::resolution::{minimal_resolution, nonempty, Resolution};
use crate::error::{Error, Result};

/// One factor of a product decomposition, living on the original vertices
/// `first_vertex ..= first_vertex + n - 1` and reindexed to start at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub first_vertex: usize,
    pub instance: Instance,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.first_vertex + self.instance.n() - 1;
        write!(f, "vertices {}..={}: {}", self.first_vertex, last, self.instance)
    }
}

/// Restriction of `m` to the vertices `lo..=hi`, reindexed to `1..=hi-lo+1`.
/// With `keep` returning false a summand is dropped before restricting.
fn restrict(m: &Representation, lo: usize, hi: usize, keep: impl Fn(&Interval) -> bool) -> Representation {
    let n = hi + 1 - lo;
    let mut out = Representation::zero(n);
    for (iv, mult) in m.summands() {
        if !keep(&iv) || iv.end() < lo || iv.start() > hi {
            continue;
        }
        let i = iv.start().max(lo) + 1 - lo;
        let j = iv.end().min(hi) + 1 - lo;
        out.add(Interval::new(i, j, n).expect("restriction stays in range"), mult)
            .expect("positive multiplicity");
    }
    out
}

fn instance(rep: Representation, e: Vec<usize>) -> Instance {
    Instance::new(rep, DimVector::new(e)).expect("factor lengths agree")
}

/// Cuts the vertex axis after each `a < n` with `e_a = 0`, `e_a = d_a` or
/// `r_a <= q_{a+1}`, and peels a point factor off the last vertex when
/// `e_n = 0` or `e_n = d_n`. Every factor with two or more vertices is simple.
///
/// The fixed-point set of the input is the product of the factors'
/// fixed-point sets.
pub fn decompose_simple(inst: &Instance) -> Result<Vec<Factor>> {
    if !nonempty(inst) {
        return Err(Error::EmptyInstance);
    }
    let mut out = Vec::new();
    split(1, inst.clone(), &mut out);
    Ok(out)
}

fn split(offset: usize, inst: Instance, out: &mut Vec<Factor>) {
    let n = inst.n();
    let m = inst.rep();
    let e = inst.e();
    let d = inst.d();
    let Resolution { q, r } = minimal_resolution(m);

    for a in 1..n {
        let zero_cut = e.at(a) == 0 || r.at(a) <= q.at(a + 1);
        let full_cut = e.at(a) == d.at(a);
        if !(zero_cut || full_cut) {
            continue;
        }
        let left = instance(restrict(m, 1, a, |_| true), e[..a].to_vec());
        let right = if zero_cut {
            instance(restrict(m, a + 1, n, |_| true), e[a..].to_vec())
        } else {
            // U_a = M_a, so U contains the image of M_a; pass to the quotient.
            let image = |b: usize| {
                m.summands()
                    .filter(|(iv, _)| iv.start() <= a && iv.end() >= b)
                    .map(|(_, mult)| mult)
                    .sum::<usize>()
            };
            let e_right = (a + 1..=n).map(|b| e.at(b) - image(b)).collect();
            instance(restrict(m, a + 1, n, |iv| iv.start() > a), e_right)
        };
        split(offset, left, out);
        split(offset + a, right, out);
        return;
    }

    if n >= 2 && (e.at(n) == 0 || e.at(n) == d.at(n)) {
        let (left, point) = if e.at(n) == 0 {
            // U_n = 0 forces U into the summands that vanish at n.
            let left = instance(restrict(m, 1, n - 1, |iv| iv.end() < n), e[..n - 1].to_vec());
            let point = instance(restrict(m, n, n, |_| true), vec![0]);
            (left, point)
        } else {
            let left = instance(restrict(m, 1, n - 1, |_| true), e[..n - 1].to_vec());
            let top = restrict(m, n, n, |iv| iv.start() == n);
            let k = top.total_summands();
            (left, instance(top, vec![k]))
        };
        split(offset, left, out);
        out.push(Factor {
            first_vertex: offset + n - 1,
            instance: point,
        });
        return;
    }

    out.push(Factor {
        first_vertex: offset,
        instance: inst,
    });
}
