use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::frame::ResolutionFrame;
use crate::error::{Error, Result};
use crate::repcore::{Interval, Representation};

/// A torus fixed point: a chain `K_1 ⊆ … ⊆ K_n` of subsets of `{1..N}`,
/// each stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubsetChain {
    sets: Vec<Vec<usize>>,
}

impl SubsetChain {
    /// Builds a chain from arbitrary sets; sorts and deduplicates each one.
    pub fn new(sets: Vec<Vec<usize>>) -> Self {
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        SubsetChain { sets }
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// `K_a` for the 1-based vertex `a`.
    pub fn level(&self, a: usize) -> &[usize] {
        &self.sets[a - 1]
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    /// First vertex at which `x` enters the chain, or `None`.
    pub fn entering_vertex(&self, x: usize) -> Option<usize> {
        self.sets.iter().position(|s| s.binary_search(&x).is_ok()).map(|p| p + 1)
    }

    /// Whether this chain satisfies the fixed-point conditions of `frame`:
    /// nested, `|K_a| = f_a` and `{1..q_a} ⊆ K_a ⊆ {1..r_a}`.
    pub fn is_valid_in(&self, frame: &ResolutionFrame) -> bool {
        if self.n() != frame.n() {
            return false;
        }
        let nested = self
            .sets
            .windows(2)
            .all(|w| w[0].iter().all(|x| w[1].binary_search(x).is_ok()));
        nested
            && (1..=frame.n()).all(|a| {
                let k = self.level(a);
                let (q, r) = (frame.q().at(a), frame.r().at(a));
                k.len() == frame.f().at(a)
                    && (1..=q).all(|x| k.binary_search(&x).is_ok())
                    && k.iter().all(|&x| (1..=r).contains(&x))
            })
    }
}

impl fmt::Display for SubsetChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, set) in self.sets.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{}}}", set.iter().join(","))?;
        }
        write!(f, ")")
    }
}

/// Refuses enumerations whose predicted size exceeds `limit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub limit: u64,
}

impl Guard {
    pub const DEFAULT_LIMIT: u64 = 10_000_000;

    pub fn new(limit: u64) -> Self {
        Guard { limit }
    }

    pub fn unlimited() -> Self {
        Guard { limit: u64::MAX }
    }

    pub fn check(&self, predicted: u128) -> Result<()> {
        if predicted > u128::from(self.limit) {
            Err(Error::GuardExceeded {
                predicted,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard::new(Self::DEFAULT_LIMIT)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.saturating_mul((n - t) as u128) / (t as u128 + 1);
    }
    acc
}

/// Upper bound `Π_a C(r_a − q_a, f_a − q_a)` on the number of fixed points.
pub fn predicted_fixed_points(frame: &ResolutionFrame) -> u128 {
    (1..=frame.n()).fold(1u128, |acc, a| {
        let (q, r, f) = (frame.q().at(a), frame.r().at(a), frame.f().at(a));
        if f < q || f > r {
            0
        } else {
            acc.saturating_mul(binomial(r - q, f - q))
        }
    })
}

/// All fixed points of the frame, each once, lexicographically ordered on the
/// tuple of sorted sets. Empty iff the quiver Grassmannian is empty.
pub fn enumerate_fixed_points(frame: &ResolutionFrame, guard: Guard) -> Result<Vec<SubsetChain>> {
    guard.check(predicted_fixed_points(frame))?;
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(frame.n());
    descend(frame, &mut stack, &mut out);
    Ok(out)
}

fn descend(frame: &ResolutionFrame, stack: &mut Vec<Vec<usize>>, out: &mut Vec<SubsetChain>) {
    let a = stack.len() + 1;
    if a > frame.n() {
        out.push(SubsetChain { sets: stack.clone() });
        return;
    }
    let (q, r, f) = (frame.q().at(a), frame.r().at(a), frame.f().at(a));
    let mut forced: Vec<usize> = stack.last().cloned().unwrap_or_default();
    forced.extend(1..=q);
    forced.sort_unstable();
    forced.dedup();
    if forced.len() > f || forced.last().is_some_and(|&x| x > r) {
        return;
    }
    let pool: Vec<usize> = (1..=r).filter(|x| forced.binary_search(x).is_err()).collect();
    // combinations come out lexicographically, and with a fixed forced part
    // that is also the lexicographic order of the resulting sorted sets
    for extra in pool.into_iter().combinations(f - forced.len()) {
        let mut level: Vec<usize> = forced.iter().copied().chain(extra).collect();
        level.sort_unstable();
        stack.push(level);
        descend(frame, stack, out);
        stack.pop();
    }
}

/// The chain `K_a = {1..f_a}`, the Bruhat minimum of a nonempty instance.
pub fn minimal_chain(frame: &ResolutionFrame) -> SubsetChain {
    SubsetChain {
        sets: frame.f().iter().map(|&f| (1..=f).collect()).collect(),
    }
}

/// Dimension of the upper-triangular Borel orbit through the fixed point:
/// `Σ_a Σ_{x ∈ K_a ∖ K_{a−1}} #{y < x : y ∉ K_a}`.
pub fn cell_dimension(chain: &SubsetChain) -> usize {
    let mut dim = 0;
    let mut prev: &[usize] = &[];
    for level in chain.sets() {
        for (rank, &x) in level.iter().enumerate() {
            if prev.binary_search(&x).is_err() {
                // `rank` members of the level lie below x
                dim += x - 1 - rank;
            }
        }
        prev = level;
    }
    dim
}

/// Componentwise comparison of the sorted levels.
pub fn bruhat_leq(k: &SubsetChain, l: &SubsetChain) -> bool {
    k.n() == l.n()
        && k.sets().iter().zip(l.sets()).all(|(a, b)| {
            a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
        })
}

/// The Bruhat-maximal fixed points, lexicographically ordered. Each one is
/// the dense cell of one irreducible component.
pub fn components(frame: &ResolutionFrame, guard: Guard) -> Result<Vec<SubsetChain>> {
    let chains = enumerate_fixed_points(frame, guard)?;
    Ok(maximal_elements(&chains))
}

/// Maximal elements of a set of chains under [`bruhat_leq`], in input order.
pub fn maximal_elements(chains: &[SubsetChain]) -> Vec<SubsetChain> {
    let dims: Vec<usize> = chains.iter().map(cell_dimension).collect();
    // a strictly larger chain has a strictly larger cell
    chains
        .iter()
        .enumerate()
        .filter(|&(i, k)| {
            !chains
                .iter()
                .enumerate()
                .any(|(j, l)| dims[j] > dims[i] && bruhat_leq(k, l))
        })
        .map(|(_, k)| k.clone())
        .collect()
}

/// Isomorphism type of the subrepresentation at a fixed point, from the ranks
/// `ρ_{a,b} = f_a − |K_a ∩ {1..q_b}|` of the maps `U_a → U_b`.
pub fn subrep_type(frame: &ResolutionFrame, chain: &SubsetChain) -> Result<Representation> {
    let n = frame.n();
    let rank = |a: usize, b: usize| -> i64 {
        if a == 0 || b > n {
            return 0;
        }
        let qb = frame.q().at(b);
        let level = chain.level(a);
        (level.len() - level.iter().filter(|&&x| x <= qb).count()) as i64
    };
    let mut out = Representation::zero(n);
    for i in 1..=n {
        for j in i..=n {
            let mult = rank(i, j) - rank(i - 1, j) - rank(i, j + 1) + rank(i - 1, j + 1);
            if mult < 0 {
                return Err(Error::Inconsistent(format!(
                    "negative multiplicity {mult} of M[{i},{j}] at {chain}"
                )));
            }
            if mult > 0 {
                out.add(Interval::new(i, j, n)?, mult as usize)?;
            }
        }
    }
    if out.dimension_vector() != frame.e() {
        return Err(Error::Inconsistent(format!(
            "subrepresentation at {chain} has dimension {} instead of {}",
            out.dimension_vector(),
            frame.e()
        )));
    }
    Ok(out)
}

/// Subrepresentation at a fixed point read off summand by summand: basis
/// vector `x` contributes `M[enter_x, j_x]` when it enters before leaving the
/// support of its summand.
pub fn subrep_by_summands(frame: &ResolutionFrame, chain: &SubsetChain) -> Result<Representation> {
    let mut out = Representation::zero(frame.n());
    for x in 1..=frame.big_n() {
        let summand = frame.summand_of(x);
        if let Some(enter) = chain.entering_vertex(x) {
            if enter <= summand.end() {
                out.add(Interval::new(enter, summand.end(), frame.n())?, 1)?;
            }
        }
    }
    Ok(out)
}
