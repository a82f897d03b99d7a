//! Irreducibility criteria, the Weyl group element of an irreducible simple
//! instance, and the combinatorial shadow of the automorphism group.

use super::chain::SubsetChain;
use super::frame::ResolutionFrame;
use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::repcore::{
    decompose_simple, euler_form, hom_into, is_catenoid, is_simple, minimal_resolution, Catenoid, Instance,
    Interval, Representation,
};

/// `r_a − e_a >= r_{a+1} − e_{a+1}` for every `a < n`.
pub fn rank_criterion(inst: &Instance) -> bool {
    let r = minimal_resolution(inst.rep()).r;
    let e = inst.e();
    (1..inst.n()).all(|a| r.at(a) + e.at(a + 1) >= r.at(a + 1) + e.at(a))
}

/// Splits the instance into simple factors and applies [`rank_criterion`]
/// to each of them.
pub fn is_irreducible(inst: &Instance) -> Result<bool> {
    Ok(decompose_simple(inst)?
        .iter()
        .all(|factor| rank_criterion(&factor.instance)))
}

/// `[M, U] <= ⟨e, dim U⟩` for every non-injective indecomposable `U = M[i,j]`,
/// `2 <= i <= j <= n`.
pub fn hom_criterion(inst: &Instance) -> bool {
    let n = inst.n();
    let e = inst.e();
    (2..=n).all(|i| {
        (i..=n).all(|j| {
            let u = Interval::new(i, j, n).expect("valid interval");
            // ⟨e, dim M[i,j]⟩ telescopes to e_j − e_{i−1}
            hom_into(inst.rep(), &u) as i64 <= e.at(j) as i64 - e.at(i - 1) as i64
        })
    })
}

/// First `U` violating [`hom_criterion`], with `[M, U]` and `⟨e, dim U⟩`.
pub fn hom_criterion_witness(inst: &Instance) -> Option<(Interval, usize, i64)> {
    let n = inst.n();
    for i in 2..=n {
        for j in i..=n {
            let u = Interval::new(i, j, n).expect("valid interval");
            let hom = hom_into(inst.rep(), &u);
            let pairing = euler_form(inst.e(), &u.dimension_vector(n));
            if hom as i64 > pairing {
                return Some((u, hom, pairing));
            }
        }
    }
    None
}

/// The Weyl group element `w = π_n ⋯ π_1` together with the reduced word it
/// was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub permutation: Permutation,
    /// Indices of simple reflections, leftmost factor first.
    pub word: Vec<usize>,
}

impl WeylElement {
    /// The fixed point `p(w)`: levels `w({1..f_a})`.
    pub fn induced_chain(&self, frame: &ResolutionFrame) -> SubsetChain {
        SubsetChain::new(
            frame
                .f()
                .iter()
                .map(|&f| self.permutation.image_of_prefix(f))
                .collect(),
        )
    }
}

/// Builds `w = π_n ⋯ π_1` for a simple instance meeting the rank criterion.
///
/// With `m_a = (d_a − e_a) − (d_{a+1} − e_{a+1})` (and `m_n = d_n − e_n`),
/// `π_a = G_0 G_1 ⋯ G_{e_a − 1}` where `G_t = s_{q_a+m_a+t} ⋯ s_{q_a+t+1}`.
pub fn weyl_word(inst: &Instance) -> Result<WeylElement> {
    if !is_simple(inst) {
        return Err(Error::NotSimple);
    }
    if !rank_criterion(inst) {
        return Err(Error::NotIrreducible);
    }
    word_from_frame_data(inst)
}

/// The construction behind [`weyl_word`] without the simplicity and
/// irreducibility checks; fails only if some `m_a` is negative.
pub fn word_from_frame_data(inst: &Instance) -> Result<WeylElement> {
    let n = inst.n();
    let res = minimal_resolution(inst.rep());
    let big_n = res.r.at(n);
    let d = inst.d();
    let e = inst.e();
    let coker = |a: usize| if a > n { 0 } else { d.at(a) as i64 - e.at(a) as i64 };

    let mut word = Vec::new();
    for a in (1..=n).rev() {
        let m = coker(a) - coker(a + 1);
        if m < 0 {
            return Err(Error::Inconsistent(format!("m_{a} = {m} is negative")));
        }
        let (m, q) = (m as usize, res.q.at(a));
        for t in 0..e.at(a) {
            word.extend((q + t + 1..=q + m + t).rev());
        }
    }
    if let Some(&bad) = word.iter().find(|&&i| i >= big_n) {
        return Err(Error::Inconsistent(format!("s_{bad} does not exist in S_{big_n}")));
    }
    Ok(WeylElement {
        permutation: Permutation::from_word(&word, big_n),
        word,
    })
}

/// `P = ⊕ P_a^{e_a − e_{a−1}}` and `I = ⊕ I_a^{(d_a − e_a) − (d_{a+1} − e_{a+1})}`,
/// or `None` if either exponent sequence goes negative.
pub fn exists_p_i(inst: &Instance) -> Option<(Representation, Representation)> {
    let n = inst.n();
    let d = inst.d();
    let e = inst.e();
    let mut p = Representation::zero(n);
    let mut i = Representation::zero(n);
    for a in 1..=n {
        let step = e.at(a).checked_sub(e.at(a - 1))?;
        if step > 0 {
            p.add(Interval::projective(a, n).ok()?, step).ok()?;
        }
        let here = d.at(a) - e.at(a);
        let next = if a < n { d.at(a + 1) - e.at(a + 1) } else { 0 };
        let drop = here.checked_sub(next)?;
        if drop > 0 {
            i.add(Interval::injective(a, n).ok()?, drop).ok()?;
        }
    }
    let cokernel: Vec<usize> = d.iter().zip(e.iter()).map(|(d, e)| d - e).collect();
    (p.dimension_vector() == *e && i.dimension_vector().as_slice() == cokernel.as_slice()).then_some((p, i))
}

/// Multiplicities `a_1, …, a_r` of the distinct summands in ascending order:
/// the block sizes of the standard parabolic subgroup acting on the frame.
pub fn parabolic_blocks(m: &Representation) -> Result<Vec<usize>> {
    match is_catenoid(m) {
        Catenoid::Chain(chain) => Ok(chain.iter().map(|iv| m.multiplicity(iv)).collect()),
        Catenoid::Incomparable(a, b) => Err(Error::NotCatenoid(a, b)),
    }
}
