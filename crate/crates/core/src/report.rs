//! Everything known about one instance, as a serializable record.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::instance::InstanceSpec;
use crate::poincare::{poincare_cells, poincare_formula};
use crate::repcore::{is_simple, nonempty, Instance};
use crate::schubert::{
    build_frame, cell_dimension, enumerate_fixed_points, is_irreducible, maximal_elements, parabolic_blocks,
    rank_criterion, subrep_type, weyl_word, Guard,
};
use crate::BigPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeylReport {
    pub word: Vec<usize>,
    pub one_line: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentReport {
    pub chain: Vec<Vec<usize>>,
    pub dim: usize,
    pub subrep: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl_word: Option<WeylReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoincareReport {
    pub formula: String,
    pub cells: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub instance: InstanceSpec,
    pub catenoid: bool,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
    pub f: Vec<usize>,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub nonempty: bool,
    pub simple: bool,
    /// `None` for an empty instance.
    pub irreducible: Option<bool>,
    pub fixed_points: usize,
    pub components: Vec<ComponentReport>,
    pub poincare: PoincareReport,
    pub euler: String,
    pub blocks: Vec<usize>,
}

impl Report {
    /// Fails with `NotCatenoid` or `GuardExceeded`.
    pub fn build(inst: &Instance, guard: Guard) -> Result<Report> {
        let frame = build_frame(inst)?;
        let chains = enumerate_fixed_points(&frame, guard)?;
        let tops = maximal_elements(&chains);
        let nonempty = nonempty(inst);
        let simple = is_simple(inst);
        let irreducible = if nonempty { Some(is_irreducible(inst)?) } else { None };
        let word = if simple && rank_criterion(inst) {
            let w = weyl_word(inst)?;
            Some(WeylReport {
                one_line: w.permutation.one_line().to_vec(),
                word: w.word,
            })
        } else {
            None
        };
        let components = tops
            .iter()
            .map(|c| {
                Ok(ComponentReport {
                    chain: c.sets().to_vec(),
                    dim: cell_dimension(c),
                    subrep: subrep_type(&frame, c)?
                        .triples()
                        .into_iter()
                        .map(|(i, j, m)| [i, j, m])
                        .collect(),
                    weyl_word: word.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let formula: BigPoly = poincare_formula(inst, guard)?;
        let cells: BigPoly = poincare_cells(&frame, guard)?;
        Ok(Report {
            instance: InstanceSpec::from_instance(inst),
            catenoid: true,
            q: frame.q().to_vec(),
            r: frame.r().to_vec(),
            f: frame.f().to_vec(),
            big_n: frame.big_n(),
            nonempty,
            simple,
            irreducible,
            fixed_points: chains.len(),
            components,
            euler: formula.eval_one()?.to_string(),
            poincare: PoincareReport {
                formula: formula.to_string(),
                cells: cells.to_string(),
            },
            blocks: parabolic_blocks(inst.rep())?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| crate::Error::Syntax(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::family;

    #[test]
    fn degflag_report() {
        let r = Report::build(&family("degflag", 2).unwrap(), Guard::default()).unwrap();
        assert_eq!((r.q.as_slice(), r.r.as_slice(), r.f.as_slice(), r.big_n), (&[0, 1][..], &[3, 4][..], &[1, 3][..], 4));
        assert_eq!(r.irreducible, Some(true));
        assert_eq!(r.fixed_points, 7);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].dim, 3);
        assert_eq!(r.components[0].weyl_word.as_ref().unwrap().one_line, vec![3, 1, 4, 2]);
        assert_eq!(r.poincare.formula, "1 + 2*q + 3*q^2 + q^3");
        assert_eq!(r.poincare.formula, r.poincare.cells);
        assert_eq!(r.euler, "7");
        assert_eq!(r.blocks, vec![1, 2, 1]);
    }

    #[test]
    fn complexes_report() {
        let r = Report::build(&family("complexes", 3).unwrap(), Guard::default()).unwrap();
        assert_eq!(r.fixed_points, 5);
        let dims: Vec<usize> = r.components.iter().map(|c| c.dim).collect();
        assert_eq!(dims.len(), 2);
        assert!(dims.contains(&1) && dims.contains(&2));
        assert!(r.components.iter().all(|c| c.weyl_word.is_none()));
        assert_eq!(r.irreducible, Some(false));
    }

    #[test]
    fn json_roundtrip() {
        for inst in [family("degflag", 3).unwrap(), family("complexes", 4).unwrap()] {
            let r = Report::build(&inst, Guard::default()).unwrap();
            let text = r.to_json();
            let back = Report::from_json(&text).unwrap();
            assert_eq!(back, r);
            assert_eq!(back.to_json(), text);
        }
    }
}
