use std::fmt;

use serde::Serialize;

use super::coeff::Coeff;
use super::multinomial::q_multinomial;
use super::polynomial::QPolynomial;
use crate::error::{Error, Result};
use crate::repcore::{is_catenoid, Catenoid, DimVector, Instance, Interval, Representation};
use crate::schubert::{build_frame, cell_dimension, enumerate_fixed_points, Guard, ResolutionFrame, SubsetChain};

/// Splitting of `e` over the distinct summands of a catenoid representation,
/// one part per interval in ascending order. Part `l` is supported on its
/// interval, weakly increasing there and bounded by the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    parts: Vec<DimVector>,
}

impl Decomposition {
    pub fn new(parts: Vec<DimVector>) -> Self {
        Decomposition { parts }
    }

    pub fn parts(&self) -> &[DimVector] {
        &self.parts
    }

    /// `Σ_l e(l)`.
    pub fn total(&self, n: usize) -> DimVector {
        let mut sum = vec![0; n];
        for part in &self.parts {
            for (s, v) in sum.iter_mut().zip(part.iter()) {
                *s += v;
            }
        }
        sum.into()
    }

    /// Whether the parts satisfy the support, monotonicity and multiplicity
    /// conditions for `rep` and add up to `e`.
    pub fn is_valid_for(&self, rep: &Representation, e: &DimVector) -> bool {
        let n = rep.n();
        self.parts.len() == rep.num_distinct()
            && self.total(n) == *e
            && rep.summands().zip(&self.parts).all(|((iv, m), part)| {
                part.len() == n
                    && (1..=n).all(|a| iv.contains(a) || part.at(a) == 0)
                    && (iv.start()..iv.end()).all(|a| part.at(a) <= part.at(a + 1))
                    && part.at(iv.end()) <= m
            })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

fn chain_of(rep: &Representation) -> Result<Vec<(Interval, usize)>> {
    match is_catenoid(rep) {
        Catenoid::Chain(_) => Ok(rep.summands().collect()),
        Catenoid::Incomparable(a, b) => Err(Error::NotCatenoid(a, b)),
    }
}

/// All decompositions of `e`, in lexicographic order of the tuple of parts.
pub fn strata(inst: &Instance, guard: Guard) -> Result<Vec<Decomposition>> {
    let blocks = chain_of(inst.rep())?;
    let n = inst.n();
    // capacity[l][a−1]: how much of vertex a the blocks after l can still absorb
    let mut capacity = vec![vec![0usize; n]; blocks.len() + 1];
    for l in (0..blocks.len()).rev() {
        let (iv, m) = blocks[l];
        capacity[l] = capacity[l + 1].clone();
        for a in iv.start()..=iv.end() {
            capacity[l][a - 1] += m;
        }
    }
    if (0..n).any(|a| inst.e()[a] > capacity[0][a]) {
        return Ok(Vec::new());
    }
    let mut search = StrataSearch {
        blocks: &blocks,
        capacity: &capacity,
        n,
        guard,
        parts: Vec::new(),
        out: Vec::new(),
    };
    search.block(0, inst.e().to_vec())?;
    Ok(search.out)
}

struct StrataSearch<'a> {
    blocks: &'a [(Interval, usize)],
    capacity: &'a [Vec<usize>],
    n: usize,
    guard: Guard,
    parts: Vec<DimVector>,
    out: Vec<Decomposition>,
}

impl StrataSearch<'_> {
    fn block(&mut self, l: usize, remaining: Vec<usize>) -> Result<()> {
        if l == self.blocks.len() {
            if remaining.iter().all(|&v| v == 0) {
                self.guard.check(self.out.len() as u128 + 1)?;
                self.out.push(Decomposition::new(self.parts.clone()));
            }
            return Ok(());
        }
        let (iv, m) = self.blocks[l];
        let after = &self.capacity[l + 1];
        // vertices off this interval must be absorbed later
        if (1..=self.n).any(|a| !iv.contains(a) && remaining[a - 1] > after[a - 1]) {
            return Ok(());
        }
        let bounds: Vec<(usize, usize)> = (iv.start()..=iv.end())
            .map(|a| {
                let rem = remaining[a - 1];
                (rem.saturating_sub(after[a - 1]), rem.min(m))
            })
            .collect();
        let mut values = Vec::with_capacity(bounds.len());
        self.fill(l, &bounds, &mut values, &remaining)
    }

    fn fill(&mut self, l: usize, bounds: &[(usize, usize)], values: &mut Vec<usize>, remaining: &[usize]) -> Result<()> {
        if values.len() == bounds.len() {
            let start = self.blocks[l].0.start();
            let mut part = vec![0; self.n];
            let mut rest = remaining.to_vec();
            for (k, &v) in values.iter().enumerate() {
                part[start + k - 1] = v;
                rest[start + k - 1] -= v;
            }
            self.parts.push(part.into());
            let res = self.block(l + 1, rest);
            self.parts.pop();
            return res;
        }
        let (lo, hi) = bounds[values.len()];
        let lo = lo.max(values.last().copied().unwrap_or(0));
        for v in lo..=hi {
            values.push(v);
            let res = self.fill(l, bounds, values, remaining);
            values.pop();
            res?;
        }
        Ok(())
    }
}

/// Dimension of the affine fibres of the stratum of `dec`:
/// `Σ_l Σ_{i ∈ p_l} (e(l)_i − e(l)_{i−1}) · Σ_{s<l, i ∈ p_s} (m_s − e(s)_i)`.
///
/// Each vector entering part `l` at vertex `i` can be moved along every
/// earlier summand direction at `i` not already taken by the subspace.
pub fn fiber_dim(rep: &Representation, dec: &Decomposition) -> usize {
    let blocks: Vec<(Interval, usize)> = rep.summands().collect();
    debug_assert_eq!(blocks.len(), dec.parts().len());
    let mut dim = 0;
    for (l, ((iv, _), part)) in blocks.iter().zip(dec.parts()).enumerate() {
        for i in iv.start()..=iv.end() {
            let increment = part.at(i) - if i > iv.start() { part.at(i - 1) } else { 0 };
            if increment == 0 {
                continue;
            }
            let free: usize = blocks[..l]
                .iter()
                .zip(dec.parts())
                .filter(|((s, _), _)| s.contains(i))
                .map(|((_, m), p)| m - p.at(i))
                .sum();
            dim += increment * free;
        }
    }
    dim
}

/// Poincaré polynomial from the stratification: each stratum is an affine
/// fibration of rank [`fiber_dim`] over a product of partial flag varieties.
pub fn poincare_formula<C: Coeff>(inst: &Instance, guard: Guard) -> Result<QPolynomial<C>> {
    let mut total = QPolynomial::zero();
    for dec in strata(inst, guard)? {
        let mut term = QPolynomial::one();
        for ((iv, m), part) in inst.rep().summands().zip(dec.parts()) {
            let flag: Vec<usize> = (iv.start()..=iv.end()).map(|a| part.at(a)).collect();
            term = term.checked_mul(&q_multinomial(m, &flag)?)?;
        }
        total = total.checked_add(&term.shift(fiber_dim(inst.rep(), &dec)))?;
    }
    Ok(total)
}

/// `Σ q^{cell_dimension}` over the fixed points of the frame.
pub fn poincare_cells<C: Coeff>(frame: &ResolutionFrame, guard: Guard) -> Result<QPolynomial<C>> {
    let mut counts: Vec<usize> = Vec::new();
    for chain in enumerate_fixed_points(frame, guard)? {
        let d = cell_dimension(&chain);
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    let coeffs = counts
        .into_iter()
        .map(|c| C::from_usize(c).ok_or(Error::Overflow))
        .collect::<Result<Vec<C>>>()?;
    Ok(QPolynomial::from_coeffs(coeffs))
}

/// [`poincare_formula`] at `q = 1`, the number of fixed points.
pub fn euler_characteristic<C: Coeff>(inst: &Instance, guard: Guard) -> Result<C> {
    poincare_formula::<C>(inst, guard)?.eval_one()
}

/// The decomposition of the stratum containing a fixed point: part `l`
/// collects the subrepresentation pieces coming from copies of `p_l`.
pub fn stratum_of(frame: &ResolutionFrame, chain: &SubsetChain) -> Decomposition {
    let n = frame.n();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut prev: Option<Interval> = None;
    for x in 1..=frame.big_n() {
        let iv = frame.summand_of(x);
        if prev != Some(iv) {
            parts.push(vec![0; n]);
            prev = Some(iv);
        }
        let part = parts.last_mut().expect("pushed above");
        if let Some(enter) = chain.entering_vertex(x) {
            for a in enter..=iv.end() {
                part[a - 1] += 1;
            }
        }
    }
    Decomposition::new(parts.into_iter().map(DimVector::from).collect())
}

/// Builds the frame and runs [`poincare_cells`].
pub fn poincare_cells_of<C: Coeff>(inst: &Instance, guard: Guard) -> Result<QPolynomial<C>> {
    poincare_cells(&build_frame(inst)?, guard)
}
