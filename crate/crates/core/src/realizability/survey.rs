//! Exhaustive sweeps over small `Aₙ`, targets and all `η` in one stem.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check, StableChecker, Status, TwoStagePiAlgebra};
use crate::error::{Error, Result};
use crate::fgab::{hom_group, FgAbGroup};
use crate::int::Int;
use crate::pi_functors::gamma_tilde;
use crate::tables::{format_group, StableTables};

#[derive(Clone, Debug)]
pub struct SurveyOptions {
    /// Largest finite cyclic order used for summands of `Aₙ`.
    pub max_cyclic_order: u64,
    pub max_summands: usize,
    /// Whether `ℤ` may occur as a summand of `Aₙ`.
    pub include_free: bool,
    pub targets: Vec<FgAbGroup>,
    /// Cap on the number of `η` examined per `(Aₙ, target)` pair.
    pub max_maps: usize,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            max_cyclic_order: 4,
            max_summands: 1,
            include_free: true,
            targets: vec![],
            max_maps: 100_000,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyCell {
    pub a_n: String,
    pub target: String,
    pub realizable: usize,
    pub non_realizable: usize,
    pub undetermined: usize,
}

impl SurveyCell {
    pub fn total(&self) -> usize {
        self.realizable + self.non_realizable + self.undetermined
    }

    fn record(&mut self, s: Status) {
        match s {
            Status::Realizable => self.realizable += 1,
            Status::NonRealizable => self.non_realizable += 1,
            Status::Undetermined => self.undetermined += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub stem: u32,
    pub n: u32,
    pub cells: Vec<SurveyCell>,
    pub totals: SurveyCell,
}

impl SurveyReport {
    pub fn fraction_realizable(&self) -> Option<f64> {
        let t = self.totals.total();
        (t > 0).then(|| self.totals.realizable as f64 / t as f64)
    }
}

impl fmt::Display for SurveyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "stem {} (n = {})", self.stem, self.n)?;
        writeln!(f, "{:<28} {:<16} {:>10} {:>10} {:>10}", "A_n", "target", "realizable", "not", "undet.")?;
        for c in &self.cells {
            writeln!(f, "{:<28} {:<16} {:>10} {:>10} {:>10}", c.a_n, c.target, c.realizable, c.non_realizable, c.undetermined)?;
        }
        let t = &self.totals;
        writeln!(f, "{:<45} {:>10} {:>10} {:>10}", "total", t.realizable, t.non_realizable, t.undetermined)?;
        if let Some(p) = self.fraction_realizable() {
            writeln!(f, "realizable: {:.1}%", 100.0 * p)?;
        }
        Ok(())
    }
}

/// Nondecreasing sequences of cyclic orders (0 for ℤ), one per summand.
fn candidate_groups(opts: &SurveyOptions) -> Vec<FgAbGroup> {
    let mut orders: Vec<u64> = (2..=opts.max_cyclic_order).collect();
    if opts.include_free {
        orders.push(0);
    }
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<u64>, usize)> = vec![(vec![], 0)];
    while let Some((seq, start)) = stack.pop() {
        if !seq.is_empty() {
            out.push(FgAbGroup::from_cyclic_orders(&seq));
        }
        if seq.len() < opts.max_summands {
            for (i, &o) in orders.iter().enumerate().skip(start) {
                let mut next = seq.clone();
                next.push(o);
                stack.push((next, i));
            }
        }
    }
    out.sort_by_key(|g| (g.ngens(), format_group(g)));
    out
}

/// Tabulates verdicts for every `η : Γ̃ₙᵏ(Aₙ) → B` with `n = k + 2`, `Aₙ`
/// ranging over small direct sums of cyclic groups and `B` over the
/// targets.
pub fn survey_stem(k: u32, tables: &StableTables, opts: &SurveyOptions) -> Result<SurveyReport> {
    let n = k + 2;
    let pairs: Vec<(FgAbGroup, FgAbGroup)> = candidate_groups(opts)
        .into_iter()
        .flat_map(|a| opts.targets.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let cells: Vec<SurveyCell> = pairs
        .par_iter()
        .map(|(a, b)| -> Result<SurveyCell> {
            let mut cell = SurveyCell { a_n: format_group(a), target: format_group(b), ..Default::default() };
            let gt = gamma_tilde(n, k, a, tables)?;
            let homs = hom_group(&gt.group, b);
            let count = homs.group.cardinality();
            if count.as_ref().is_none_or(|c| *c > Int::from(opts.max_maps)) {
                return Err(Error::BoundExceeded(format!(
                    "Hom({}, {}) has more than {} elements",
                    gt.group, b, opts.max_maps
                )));
            }
            let checker = if k >= 3 { Some(StableChecker::new(n, k, a, tables)?) } else { None };
            for eta in homs.homs().expect("finite hom group") {
                let status = match &checker {
                    Some(c) => c.check(&eta)?.status,
                    None => check(&TwoStagePiAlgebra::from_hom(n, k, a.clone(), eta, tables)?, tables)?.status,
                };
                cell.record(status);
            }
            Ok(cell)
        })
        .collect::<Result<_>>()?;
    let mut totals = SurveyCell { a_n: "*".into(), target: "*".into(), ..Default::default() };
    for c in &cells {
        totals.realizable += c.realizable;
        totals.non_realizable += c.non_realizable;
        totals.undetermined += c.undetermined;
    }
    Ok(SurveyReport { stem: k, n, cells, totals })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(targets: &[u64]) -> SurveyOptions {
        SurveyOptions {
            targets: targets.iter().map(|&t| FgAbGroup::cyclic(t)).collect(),
            ..Default::default()
        }
    }

    #[test]
    fn stem_two_is_all_realizable() {
        let t = StableTables::defaults();
        let r = survey_stem(2, &t, &opts(&[2, 4, 0])).unwrap();
        assert!(r.totals.total() > 0);
        assert_eq!(r.fraction_realizable(), Some(1.0));
    }

    #[test]
    fn stem_three_contains_the_smallest_example() {
        let t = StableTables::defaults();
        let mut o = opts(&[4]);
        o.max_cyclic_order = 1;
        let r = survey_stem(3, &t, &o).unwrap();
        assert_eq!(r.cells.len(), 1);
        assert_eq!(r.cells[0].a_n, "Z");
        assert!(r.cells[0].non_realizable > 0);
        assert_eq!(r.cells[0].total(), 4);
    }

    #[test]
    fn empty_targets_give_an_empty_report() {
        let r = survey_stem(3, &StableTables::defaults(), &opts(&[])).unwrap();
        assert!(r.cells.is_empty());
        assert_eq!(r.fraction_realizable(), None);
    }

    #[test]
    fn candidate_group_enumeration() {
        let o = SurveyOptions { max_cyclic_order: 3, max_summands: 2, include_free: true, ..Default::default() };
        // orders {2, 3, Z}: 3 single summands and 6 pairs
        assert_eq!(candidate_groups(&o).len(), 9);
    }
}
