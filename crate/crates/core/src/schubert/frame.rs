use crate::error::{Error, Result};
use crate::repcore::{is_catenoid, minimal_resolution, Catenoid, DimVector, Instance, Interval, Resolution};

/// The flag-variety data `(q, r, f)` of a catenoid instance.
///
/// Basis vector `k` of `C^N` (1-based) generates the projective cover of the
/// `k`-th summand in ascending catenoid order, so `R_a = span{v_1..v_{r_a}}`
/// and `Q_a = span{v_1..v_{q_a}}` are coordinate flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionFrame {
    n: usize,
    big_n: usize,
    q: DimVector,
    r: DimVector,
    f: DimVector,
    sorted_summands: Vec<Interval>,
}

impl ResolutionFrame {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `N`, the number of summands counted with multiplicity.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn q(&self) -> &DimVector {
        &self.q
    }

    pub fn r(&self) -> &DimVector {
        &self.r
    }

    pub fn f(&self) -> &DimVector {
        &self.f
    }

    /// `e = f - q`.
    pub fn e(&self) -> DimVector {
        self.f.iter().zip(self.q.iter()).map(|(f, q)| f - q).collect::<Vec<_>>().into()
    }

    pub fn sorted_summands(&self) -> &[Interval] {
        &self.sorted_summands
    }

    /// Summand carried by the 1-based basis index `x`.
    pub fn summand_of(&self, x: usize) -> Interval {
        self.sorted_summands[x - 1]
    }

    /// Whether `f` fits the frame at every vertex and is weakly increasing.
    pub fn is_feasible(&self) -> bool {
        (0..self.n).all(|a| self.q[a] <= self.f[a] && self.f[a] <= self.r[a]) && self.f.is_weakly_increasing()
    }
}

/// Frame of a catenoid instance, with `f = e + q`.
pub fn build_frame(inst: &Instance) -> Result<ResolutionFrame> {
    let chain = match is_catenoid(inst.rep()) {
        Catenoid::Chain(chain) => chain,
        Catenoid::Incomparable(a, b) => return Err(Error::NotCatenoid(a, b)),
    };
    let Resolution { q, r } = minimal_resolution(inst.rep());
    let f: Vec<usize> = inst.e().iter().zip(q.iter()).map(|(e, q)| e + q).collect();
    let sorted_summands: Vec<Interval> = chain
        .iter()
        .flat_map(|iv| std::iter::repeat_n(*iv, inst.rep().multiplicity(iv)))
        .collect();
    Ok(ResolutionFrame {
        n: inst.n(),
        big_n: sorted_summands.len(),
        q,
        r,
        f: f.into(),
        sorted_summands,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::Representation;

    fn inst(n: usize, t: &[(usize, usize, usize)], e: &[usize]) -> Instance {
        Instance::new(Representation::from_triples(n, t).unwrap(), DimVector::new(e.to_vec())).unwrap()
    }

    #[test]
    fn frame_examples() {
        let degflag = inst(2, &[(1, 2, 2), (1, 1, 1), (2, 2, 1)], &[1, 2]);
        let fr = build_frame(&degflag).unwrap();
        assert_eq!(fr.big_n(), 4);
        assert_eq!((fr.q().as_slice(), fr.r().as_slice(), fr.f().as_slice()), (&[0, 1][..], &[3, 4][..], &[1, 3][..]));

        let complexes = inst(2, &[(1, 1, 1), (1, 2, 1), (2, 2, 1)], &[1, 1]);
        let fr = build_frame(&complexes).unwrap();
        assert_eq!(fr.big_n(), 3);
        assert_eq!((fr.q().as_slice(), fr.r().as_slice(), fr.f().as_slice()), (&[0, 1][..], &[2, 3][..], &[1, 2][..]));

        let fr = build_frame(&inst(1, &[(1, 1, 1)], &[0])).unwrap();
        assert_eq!((fr.big_n(), fr.q().as_slice(), fr.r().as_slice(), fr.f().as_slice()), (1, &[0][..], &[1][..], &[0][..]));
    }

    #[test]
    fn not_catenoid() {
        let err = build_frame(&inst(3, &[(1, 3, 1), (2, 2, 1)], &[0, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::NotCatenoid(_, _)));
    }

    #[test]
    fn frame_invariants() {
        let m = inst(4, &[(1, 1, 2), (1, 3, 1), (2, 3, 1), (2, 4, 3), (4, 4, 1)], &[1, 2, 2, 1]);
        let fr = build_frame(&m).unwrap();
        let d = m.d();
        assert_eq!(fr.q().at(1), 0);
        assert!(fr.q().is_weakly_increasing() && fr.r().is_weakly_increasing());
        assert_eq!(fr.r().at(4), fr.big_n());
        for a in 1..=4 {
            assert_eq!(fr.r().at(a) - fr.q().at(a), d.at(a));
        }
        for w in fr.sorted_summands().windows(2) {
            assert!(w[0].leq(&w[1]));
        }
    }
}
