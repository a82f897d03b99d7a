//! Cross-checks between independent computations, over an exhaustive corpus
//! of small catenoid instances and optionally a seeded random sample.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::poincare::{multinomial, poincare_cells, poincare_formula, strata, stratum_of};
use crate::repcore::{
    all_intervals, decompose_simple, euler_form, interval_leq, is_simple, nonempty, DimVector, Instance, Interval,
    Representation,
};
use crate::schubert::{
    bruhat_leq, build_frame, cell_dimension, enumerate_fixed_points, hom_criterion, is_irreducible,
    maximal_elements, minimal_chain, subrep_by_summands, subrep_type, weyl_word, Guard,
};
use crate::Poly;

/// Every nonzero catenoid representation on `n` vertices with at most
/// `max_summands` summands counted with multiplicity, in a fixed order.
pub fn catenoid_representations(n: usize, max_summands: usize) -> Vec<Representation> {
    let intervals = all_intervals(n);
    let mut out = Vec::new();
    let mut chosen: Vec<(Interval, usize)> = Vec::new();
    extend_chain(&intervals, 0, max_summands, &mut chosen, &mut out, n);
    out
}

fn extend_chain(
    intervals: &[Interval],
    from: usize,
    budget: usize,
    chosen: &mut Vec<(Interval, usize)>,
    out: &mut Vec<Representation>,
    n: usize,
) {
    if !chosen.is_empty() {
        let mut rep = Representation::zero(n);
        for &(iv, m) in chosen.iter() {
            rep.add(iv, m).expect("valid summand");
        }
        out.push(rep);
    }
    for (k, iv) in intervals.iter().enumerate().skip(from) {
        // in lexicographic order a chain only needs its neighbours compared
        if chosen.last().is_some_and(|(last, _)| !interval_leq(last, iv)) {
            continue;
        }
        for m in 1..=budget {
            chosen.push((*iv, m));
            extend_chain(intervals, k + 1, budget - m, chosen, out, n);
            chosen.pop();
        }
    }
}

/// All `e` with `0 <= e_a <= d_a`, lexicographically.
pub fn dimension_vectors_below(d: &[usize]) -> Vec<DimVector> {
    let mut out = vec![Vec::with_capacity(d.len())];
    for &bound in d {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=bound).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(DimVector::new).collect()
}

/// The exhaustive corpus: every catenoid instance with `n <= max_n`, at most
/// `max_summands` summands and every `e <= d`.
pub fn exhaustive_corpus(max_n: usize, max_summands: usize) -> impl Iterator<Item = Instance> {
    (1..=max_n).flat_map(move |n| {
        catenoid_representations(n, max_summands).into_iter().flat_map(|rep| {
            dimension_vectors_below(&rep.dimension_vector())
                .into_iter()
                .map(move |e| Instance::new(rep.clone(), e).expect("lengths agree"))
        })
    })
}

/// A random catenoid instance on at most `max_n` vertices with at most
/// `max_summands` summands.
pub fn random_instance(rng: &mut impl Rng, max_n: usize, max_summands: usize) -> Instance {
    let n = rng.gen_range(1..=max_n);
    let total = rng.gen_range(1..=max_summands);
    let mut rep = Representation::zero(n);
    let mut last: Option<Interval> = None;
    for _ in 0..total {
        let candidates: Vec<Interval> = all_intervals(n)
            .into_iter()
            .filter(|iv| last.is_none_or(|l| interval_leq(&l, iv)))
            .collect();
        // staying on the current interval repeats it
        let iv = candidates[rng.gen_range(0..candidates.len())];
        rep.add(iv, 1).expect("valid summand");
        last = Some(iv);
    }
    let e: Vec<usize> = rep.dimension_vector().iter().map(|&d| rng.gen_range(0..=d)).collect();
    Instance::new(rep, DimVector::new(e)).expect("lengths agree")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    NonemptyClosedForm,
    ResolutionRank,
    FormulaEqualsCells,
    EulerCountsFixedPoints,
    ProductOverFactors,
    UniqueMinimum,
    SubrepRoutesAgree,
    StrataRefinement,
    DegreeIsTopDimension,
    CriterionGivesOneComponent,
    OneComponentIffIrreducible,
    HomCriterionIffIrreducible,
    WeylWord,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::NonemptyClosedForm,
        Property::ResolutionRank,
        Property::FormulaEqualsCells,
        Property::EulerCountsFixedPoints,
        Property::ProductOverFactors,
        Property::UniqueMinimum,
        Property::SubrepRoutesAgree,
        Property::StrataRefinement,
        Property::DegreeIsTopDimension,
        Property::CriterionGivesOneComponent,
        Property::OneComponentIffIrreducible,
        Property::HomCriterionIffIrreducible,
        Property::WeylWord,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Property::NonemptyClosedForm => "nonempty closed form = fixed point exists",
            Property::ResolutionRank => "r - q = d",
            Property::FormulaEqualsCells => "poincare formula = poincare cells",
            Property::EulerCountsFixedPoints => "euler = weighted strata = fixed points",
            Property::ProductOverFactors => "fixed points multiply over simple factors",
            Property::UniqueMinimum => "minimal chain is the unique Bruhat minimum",
            Property::SubrepRoutesAgree => "subrep types agree and have dimension e",
            Property::StrataRefinement => "every fixed point lies in a stratum",
            Property::DegreeIsTopDimension => "degree = top component dimension",
            Property::CriterionGivesOneComponent => "irreducible => one component",
            Property::OneComponentIffIrreducible => "one component <=> irreducible",
            Property::HomCriterionIffIrreducible => "hom criterion <=> irreducible (simple)",
            Property::WeylWord => "weyl word reduced, length = top dim = <e,d-e>, induces the component",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.description())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub property: String,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub exhaustive_instances: usize,
    pub sampled_instances: usize,
    /// Instances skipped because an enumeration exceeded the guard.
    pub skipped: usize,
    pub properties: Vec<PropertyTally>,
}

impl VerifyReport {
    fn new() -> Self {
        VerifyReport {
            exhaustive_instances: 0,
            sampled_instances: 0,
            skipped: 0,
            properties: Property::ALL
                .iter()
                .map(|p| PropertyTally {
                    property: p.description().to_string(),
                    checked: 0,
                    failures: 0,
                    first_failure: None,
                })
                .collect(),
        }
    }

    pub fn tally(&self, p: Property) -> &PropertyTally {
        &self.properties[Property::ALL.iter().position(|&q| q == p).expect("listed")]
    }

    fn record(&mut self, p: Property, ok: bool, inst: &Instance) {
        let t = &mut self.properties[Property::ALL.iter().position(|&q| q == p).expect("listed")];
        t.checked += 1;
        if !ok {
            t.failures += 1;
            if t.first_failure.is_none() {
                t.first_failure = Some(inst.to_string());
            }
        }
    }

    pub fn failing(&self) -> impl Iterator<Item = &PropertyTally> {
        self.properties.iter().filter(|t| t.failures > 0)
    }

    pub fn all_passed(&self) -> bool {
        self.failing().next().is_none()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_summands: usize,
    /// Seed and size of the random sample drawn beyond the exhaustive range.
    pub sample: Option<(u64, usize)>,
    pub guard: Guard,
}

pub fn verify(config: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::new();
    for inst in exhaustive_corpus(config.max_n, config.max_summands) {
        report.exhaustive_instances += 1;
        if check_instance(&inst, config.guard, &mut report).is_err() {
            report.skipped += 1;
        }
    }
    if let Some((seed, count)) = config.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let inst = random_instance(&mut rng, config.max_n + 2, config.max_summands + 3);
            report.sampled_instances += 1;
            if check_instance(&inst, config.guard, &mut report).is_err() {
                report.skipped += 1;
            }
        }
    }
    report
}

/// Runs every property on one catenoid instance.
pub fn check_instance(inst: &Instance, guard: Guard, report: &mut VerifyReport) -> Result<()> {
    use Property::*;

    let frame = build_frame(inst)?;
    let chains = enumerate_fixed_points(&frame, guard)?;
    let formula: Poly = poincare_formula(inst, guard)?;
    let cells: Poly = poincare_cells(&frame, guard)?;
    let d = inst.d();
    let is_nonempty = nonempty(inst);

    report.record(NonemptyClosedForm, is_nonempty == !chains.is_empty(), inst);
    let rank: Vec<usize> = frame.r().iter().zip(frame.q().iter()).map(|(r, q)| r - q).collect();
    report.record(ResolutionRank, rank.as_slice() == d.as_slice(), inst);
    report.record(FormulaEqualsCells, formula == cells, inst);

    let decs = strata(inst, guard)?;
    let mut weighted = 0usize;
    for dec in &decs {
        let mut w = 1usize;
        for ((iv, m), part) in inst.rep().summands().zip(dec.parts()) {
            let flag: Vec<usize> = (iv.start()..=iv.end()).map(|a| part.at(a)).collect();
            w *= multinomial::<u64>(m, &flag)? as usize;
        }
        weighted += w;
    }
    let euler = formula.eval_one()? as usize;
    report.record(EulerCountsFixedPoints, euler == chains.len() && weighted == chains.len(), inst);

    if chains.is_empty() {
        return Ok(());
    }

    let mut product = 1usize;
    let mut factors_simple = true;
    for factor in decompose_simple(inst)? {
        let fr = build_frame(&factor.instance)?;
        product *= enumerate_fixed_points(&fr, guard)?.len();
        factors_simple &= factor.instance.n() < 2 || is_simple(&factor.instance);
    }
    report.record(ProductOverFactors, product == chains.len() && factors_simple, inst);

    let bottom = minimal_chain(&frame);
    report.record(
        UniqueMinimum,
        chains.contains(&bottom) && chains.iter().all(|c| bruhat_leq(&bottom, c)),
        inst,
    );

    let e = inst.e();
    let subrep_ok = chains.iter().all(|c| {
        matches!((subrep_type(&frame, c), subrep_by_summands(&frame, c)),
            (Ok(a), Ok(b)) if a == b && a.dimension_vector() == *e)
    });
    report.record(SubrepRoutesAgree, subrep_ok, inst);

    let known: HashSet<_> = decs.iter().collect();
    let refine_ok = chains.iter().all(|c| known.contains(&stratum_of(&frame, c)));
    report.record(StrataRefinement, refine_ok, inst);

    let tops = maximal_elements(&chains);
    let top_dim = tops.iter().map(cell_dimension).max().unwrap_or(0);
    report.record(DegreeIsTopDimension, cells.degree() == Some(top_dim), inst);

    let irreducible = is_irreducible(inst)?;
    report.record(CriterionGivesOneComponent, !irreducible || tops.len() == 1, inst);
    report.record(OneComponentIffIrreducible, irreducible == (tops.len() == 1), inst);

    if is_simple(inst) {
        report.record(HomCriterionIffIrreducible, hom_criterion(inst) == irreducible, inst);
        if irreducible {
            let ok = weyl_word(inst).is_ok_and(|w| {
                let cokernel: Vec<usize> = d.iter().zip(e.iter()).map(|(d, e)| d - e).collect();
                let expected = euler_form(e, &cokernel);
                w.permutation.inversions() == w.word.len()
                    && w.word.len() == top_dim
                    && expected == top_dim as i64
                    && tops.len() == 1
                    && w.induced_chain(&frame) == tops[0]
            });
            report.record(WeylWord, ok, inst);
        }
    }
    Ok(())
}
