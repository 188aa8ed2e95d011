//! Deciding whether a 2-stage Π-algebra `(Aₙ, A_{n+k}, η)` is the
//! homotopy of a space.
//!
//! In the stable range the answer is whether `η` factors through
//! `id ⊗ γ : Aₙ ⊗ Q_k^S → Aₙ ⊗ HZ_{k+1}HZ`. With only partial knowledge of
//! `γ` the verdict quantifies over every admissible completion.

mod survey;
mod three_stage;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{
    direct_sum, factor_through, is_split_injective, kernel, tensor, tensor_hom, Element, FgAbGroup, GroupHom,
    Tensor,
};
use crate::matrix::IntMatrix;
use crate::pi_functors::{gamma_tilde, GammaTildeResult, Regime};
use crate::tables::{Coverage, GammaKnowledge, StableTables, StemData};

pub use survey::{survey_stem, SurveyCell, SurveyOptions, SurveyReport};
pub use three_stage::{three_stage_obstruction, ThreeStageInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Realizable,
    NonRealizable,
    Undetermined,
}

impl Status {
    /// `0`, `1`, `2`; errors use larger codes.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Realizable => 0,
            Status::NonRealizable => 1,
            Status::Undetermined => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Realizable => "realizable",
            Status::NonRealizable => "not realizable",
            Status::Undetermined => "undetermined",
        })
    }
}

/// An element killed by `γ` in every admissible completion on which `η`
/// does not vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub element: Element,
    pub text: String,
    /// `η(element)`, nonzero.
    pub image: Element,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletionRecord {
    /// The completion `γ : Q_k^S → HZ_{k+1}HZ`.
    pub gamma: GroupHom,
    /// `h` with `h ∘ (id ⊗ γ) = η`, when one exists.
    pub witness: Option<GroupHom>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<GroupHom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocking: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub completions: Vec<CompletionRecord>,
    pub reason: String,
}

impl Verdict {
    fn realizable(witness: Option<GroupHom>, reason: impl Into<String>) -> Self {
        Verdict {
            status: Status::Realizable,
            witness,
            obstruction: None,
            blocking: vec![],
            completions: vec![],
            reason: reason.into(),
        }
    }

    fn non_realizable(obstruction: Option<Obstruction>, reason: impl Into<String>) -> Self {
        Verdict {
            status: Status::NonRealizable,
            witness: None,
            obstruction,
            blocking: vec![],
            completions: vec![],
            reason: reason.into(),
        }
    }

    fn undetermined(blocking: Vec<String>, reason: impl Into<String>) -> Self {
        Verdict {
            status: Status::Undetermined,
            witness: None,
            obstruction: None,
            blocking,
            completions: vec![],
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.status)?;
        writeln!(f, "reason: {}", self.reason)?;
        if let Some(o) = &self.obstruction {
            writeln!(f, "obstruction: {}", o.text)?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {w}")?;
        }
        if !self.blocking.is_empty() {
            writeln!(f, "blocking: {}", self.blocking.join(", "))?;
        }
        if !self.completions.is_empty() {
            writeln!(f, "completions examined: {}", self.completions.len())?;
            for (i, c) in self.completions.iter().enumerate() {
                let outcome = match &c.witness {
                    Some(h) => format!("factors, h = {h}"),
                    None => "does not factor".to_string(),
                };
                writeln!(f, "  γ#{}: {}  →  {outcome}", i + 1, c.gamma)?;
            }
        }
        Ok(())
    }
}

/// `(Aₙ, A_{n+k}, η : Γ̃ₙᵏ(Aₙ) → A_{n+k})`.
#[derive(Clone, Debug)]
pub struct TwoStagePiAlgebra {
    pub n: u32,
    pub k: u32,
    pub a_n: FgAbGroup,
    pub a_nk: FgAbGroup,
    pub eta: GroupHom,
    pub gamma_tilde: GammaTildeResult,
}

impl TwoStagePiAlgebra {
    /// `eta` has one column per generator of `Γ̃ₙᵏ(Aₙ)`, in the order
    /// [`GammaTildeResult::labels`] lists them.
    pub fn new(n: u32, k: u32, a_n: FgAbGroup, a_nk: FgAbGroup, eta: IntMatrix, tables: &StableTables) -> Result<Self> {
        let gt = gamma_tilde(n, k, &a_n, tables)?;
        let eta = if eta.rows() == 0 || eta.cols() == 0 {
            if eta.rows() != 0 && eta.rows() != a_nk.ngens() {
                return Err(Error::InvalidProblem(format!(
                    "η has {} rows, A_{{n+k}} has {} generators",
                    eta.rows(),
                    a_nk.ngens()
                )));
            }
            IntMatrix::zeros(a_nk.ngens(), gt.group.ngens())
        } else {
            eta
        };
        if eta.rows() != a_nk.ngens() || eta.cols() != gt.group.ngens() {
            return Err(Error::InvalidProblem(format!(
                "η must be {}×{} (A_{{n+k}} generators × generators {} of Γ̃), got {}×{}",
                a_nk.ngens(),
                gt.group.ngens(),
                describe_labels(&gt),
                eta.rows(),
                eta.cols()
            )));
        }
        let eta = GroupHom::new(gt.group.clone(), a_nk.clone(), eta)
            .map_err(|e| Error::InvalidProblem(format!("η is not a homomorphism: {e}")))?;
        Ok(TwoStagePiAlgebra { n, k, a_n, a_nk, eta, gamma_tilde: gt })
    }

    pub fn from_hom(n: u32, k: u32, a_n: FgAbGroup, eta: GroupHom, tables: &StableTables) -> Result<Self> {
        let a_nk = eta.target().clone();
        Self::new(n, k, a_n, a_nk, eta.matrix().clone(), tables)
    }
}

fn describe_labels(gt: &GammaTildeResult) -> String {
    format!("[{}]", gt.labels().join(", "))
}

/// Generator names of `Aₙ ⊗ C` with the `1⊗` prefix dropped when `Aₙ` is
/// `ℤ` generated by `1`, so `1⊗ν` reads `ν`.
pub fn display_group(t: &Tensor) -> FgAbGroup {
    let left = t.left();
    if left.ngens() == 1 && left.label(0) == "1" {
        let labels: Vec<String> = t
            .group
            .label_list()
            .into_iter()
            .map(|l| l.strip_prefix("1⊗").map(str::to_string).unwrap_or(l))
            .collect();
        t.group.clone().with_labels(labels).expect("same generator count")
    } else {
        t.group.clone()
    }
}

fn first_obstruction(kernel_map: &GroupHom, eta: &GroupHom, names: &FgAbGroup) -> Option<Obstruction> {
    (0..kernel_map.source().ngens()).find_map(|i| {
        let x = kernel_map.image_of_generator(i);
        let y = eta.apply(&x);
        (!eta.target().is_zero_element(&y)).then(|| Obstruction {
            text: names.format_element(&x),
            element: x,
            image: y,
        })
    })
}

enum Mode {
    /// Every admissible `γ` enumerated.
    Completions {
        gammas: Vec<GroupHom>,
        lifted: Vec<GroupHom>,
        /// Elements killed by every completion.
        joint_kernel: GroupHom,
    },
    /// Only the universal surrogate of the partial knowledge is available.
    Surrogate { kernel: GroupHom, blocking: Vec<String>, reason: String },
}

/// Precomputed data for checking many `η` with fixed `n`, `k`, `Aₙ`.
pub struct StableChecker {
    pub n: u32,
    pub k: u32,
    tensor: Tensor,
    names: FgAbGroup,
    stem: StemData,
    mode: Mode,
}

impl StableChecker {
    pub fn new(n: u32, k: u32, a_n: &FgAbGroup, tables: &StableTables) -> Result<Self> {
        if k + 2 > n {
            return Err(Error::NotStableRange { n, k });
        }
        let stem = tables.stem(k)?;
        let t = tensor(a_n, &stem.group);
        let names = display_group(&t);
        let id = GroupHom::identity(a_n);
        let completions = match stem.coverage {
            Coverage::Full => match tables.admissible_gamma_completions(k) {
                Ok(c) => Some(c),
                Err(Error::MissingTableData(_) | Error::BoundExceeded(_)) => None,
                Err(e) => return Err(e),
            },
            Coverage::Fragment => None,
        };
        let mode = match completions {
            Some(c) if c.is_empty() => {
                return Err(Error::Inconsistent(format!("no γ in stem {k} is consistent with the tables")))
            }
            Some(c) => {
                let gammas: Vec<GroupHom> = c.into_iter().map(|c| c.map).collect();
                let lifted: Vec<GroupHom> = gammas
                    .iter()
                    .map(|g| {
                        let l = tensor_hom(&id, g);
                        let target = l.target().clone();
                        l.with_groups(t.group.clone(), target)
                    })
                    .collect();
                let targets: Vec<FgAbGroup> = lifted.iter().map(|l| l.target().clone()).collect();
                let sum = direct_sum(&targets);
                let mut stacked = GroupHom::zero(&t.group, &sum.group);
                for (inj, l) in sum.injections.iter().zip(&lifted) {
                    stacked = stacked.add(&inj.compose(l));
                }
                Mode::Completions { gammas, lifted, joint_kernel: kernel(&stacked).1 }
            }
            None => {
                let sur = stem.surrogate();
                let lifted = tensor_hom(&id, &sur);
                let lifted = lifted.with_groups(t.group.clone(), lifted.target().clone());
                let mut blocking: Vec<String> = (0..stem.group.ngens())
                    .filter(|&g| {
                        !matches!(
                            stem.entries[g].as_ref().map(|e| &e.knowledge),
                            Some(GammaKnowledge::Zero)
                        )
                    })
                    .map(|g| stem.entry_name(g))
                    .collect();
                let reason = match (stem.coverage, &stem.codomain) {
                    (Coverage::Fragment, _) => format!("only the α family part of Q_{k}^S is tabulated"),
                    (Coverage::Full, None) => {
                        blocking.push(format!("HZ_{}HZ", k + 1));
                        format!("HZ_{}HZ is not tabulated", k + 1)
                    }
                    (Coverage::Full, Some(_)) => format!("too many γ completions in stem {k}"),
                };
                Mode::Surrogate { kernel: kernel(&lifted).1, blocking, reason }
            }
        };
        Ok(StableChecker { n, k, tensor: t, names, stem, mode })
    }

    /// `Γ̃ₙᵏ(Aₙ) = Aₙ ⊗ Q_k^S` (or the known fragment).
    pub fn source(&self) -> &FgAbGroup {
        &self.tensor.group
    }

    pub fn stem(&self) -> &StemData {
        &self.stem
    }

    /// `id ⊗ γ` for each completion; empty in surrogate mode.
    pub fn lifted_completions(&self) -> &[GroupHom] {
        match &self.mode {
            Mode::Completions { lifted, .. } => lifted,
            Mode::Surrogate { .. } => &[],
        }
    }

    pub fn check(&self, eta: &GroupHom) -> Result<Verdict> {
        if eta.source() != &self.tensor.group {
            return Err(Error::InvalidProblem(format!(
                "η must start at Γ̃ = {}, not {}",
                self.tensor.group,
                eta.source()
            )));
        }
        match &self.mode {
            Mode::Completions { gammas, lifted, joint_kernel } => {
                let witnesses: Vec<Option<GroupHom>> = lifted.par_iter().map(|l| factor_through(eta, l)).collect();
                let hits = witnesses.iter().filter(|w| w.is_some()).count();
                let records: Vec<CompletionRecord> = gammas
                    .iter()
                    .zip(&witnesses)
                    .map(|(g, w)| CompletionRecord { gamma: g.clone(), witness: w.clone() })
                    .collect();
                let mut v = if hits == gammas.len() {
                    Verdict::realizable(
                        witnesses[0].clone(),
                        format!("η factors through id ⊗ γ for all {} admissible γ", gammas.len()),
                    )
                } else if hits == 0 {
                    let obstruction = first_obstruction(joint_kernel, eta, &self.names);
                    let reason = match &obstruction {
                        Some(o) => format!(
                            "{} is killed by every admissible γ but η({}) = {} ≠ 0",
                            o.text,
                            o.text,
                            eta.target().format_element(&o.image)
                        ),
                        None => format!("η factors through none of the {} admissible γ", gammas.len()),
                    };
                    Verdict::non_realizable(obstruction, reason)
                } else {
                    let outcomes: Vec<bool> = witnesses.iter().map(Option::is_some).collect();
                    Verdict::undetermined(
                        self.blocking_entries(gammas, &outcomes),
                        format!("η factors through id ⊗ γ for {hits} of {} admissible γ", gammas.len()),
                    )
                };
                v.completions = records;
                Ok(v)
            }
            Mode::Surrogate { kernel, blocking, reason } => {
                if eta.is_zero() {
                    return Ok(Verdict::realizable(None, "η = 0 is realized by a product of Eilenberg–MacLane spaces"));
                }
                Ok(match first_obstruction(kernel, eta, &self.names) {
                    Some(o) => {
                        let r = format!(
                            "{} is killed by every γ consistent with the tables but η({}) = {} ≠ 0",
                            o.text,
                            o.text,
                            eta.target().format_element(&o.image)
                        );
                        Verdict::non_realizable(Some(o), r)
                    }
                    None => Verdict::undetermined(blocking.clone(), reason.clone()),
                })
            }
        }
    }

    /// Generators whose γ value decides the outcome: two completions that
    /// differ only there disagree.
    fn blocking_entries(&self, gammas: &[GroupHom], outcomes: &[bool]) -> Vec<String> {
        let ngens = self.stem.group.ngens();
        let columns: Vec<Vec<Element>> =
            gammas.iter().map(|g| (0..ngens).map(|j| g.image_of_generator(j)).collect()).collect();
        let mut found: Vec<String> = (0..ngens)
            .filter(|&g| {
                let mut groups: BTreeMap<Vec<Element>, (bool, bool)> = BTreeMap::new();
                for (cols, &ok) in columns.iter().zip(outcomes) {
                    let key: Vec<Element> =
                        cols.iter().enumerate().filter(|&(j, _)| j != g).map(|(_, c)| c.clone()).collect();
                    let e = groups.entry(key).or_default();
                    if ok {
                        e.0 = true;
                    } else {
                        e.1 = true;
                    }
                }
                groups.values().any(|&(a, b)| a && b)
            })
            .map(|g| self.stem.entry_name(g))
            .collect();
        if found.is_empty() {
            found = (0..ngens)
                .filter(|&g| columns.iter().any(|c| c[g] != columns[0][g]))
                .map(|g| self.stem.entry_name(g))
                .collect();
        }
        found
    }
}

/// The factorization criterion for `k ≤ n − 2`.
pub fn check_stable(pa: &TwoStagePiAlgebra, tables: &StableTables) -> Result<Verdict> {
    StableChecker::new(pa.n, pa.k, &pa.a_n, tables)?.check(&pa.eta)
}

/// Every Π-algebra with `k = 1` is realizable. `γ` is then an isomorphism
/// onto a direct summand, so `η` itself (extended by zero) is the witness.
pub fn check_k1(pa: &TwoStagePiAlgebra) -> Result<Verdict> {
    if pa.k != 1 {
        return Err(Error::InvalidProblem(format!("check_k1 needs k = 1, got {}", pa.k)));
    }
    Ok(Verdict::realizable(Some(pa.eta.clone()), "every Π-algebra in degrees n, n+1 is realizable"))
}

/// Every Π-algebra with `k = 2` is realizable.
pub fn check_k2(pa: &TwoStagePiAlgebra) -> Result<Verdict> {
    if pa.k != 2 {
        return Err(Error::InvalidProblem(format!("check_k2 needs k = 2, got {}", pa.k)));
    }
    Ok(Verdict::realizable(Some(pa.eta.clone()), "every Π-algebra in degrees n, n+2 is realizable"))
}

/// Dispatch on the regime of `(n, k)`.
pub fn check(pa: &TwoStagePiAlgebra, tables: &StableTables) -> Result<Verdict> {
    match pa.gamma_tilde.regime {
        Regime::K1 => check_k1(pa),
        Regime::K2 => check_k2(pa),
        Regime::Stable => check_stable(pa, tables),
        Regime::Metastable | Regime::UnstableTabulated => {
            if pa.eta.is_zero() {
                Ok(Verdict::realizable(
                    Some(GroupHom::zero(&pa.gamma_tilde.group, &pa.a_nk)),
                    "η = 0 is realized by a product of Eilenberg–MacLane spaces",
                ))
            } else {
                Err(Error::UnstableCriterion { n: pa.n, k: pa.k })
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StemAnswer {
    Yes,
    No,
    Undetermined,
}

impl fmt::Display for StemAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StemAnswer::Yes => "yes",
            StemAnswer::No => "no",
            StemAnswer::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemVerdict {
    pub stem: u32,
    pub answer: StemAnswer,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocking: Vec<String>,
}

/// Whether every stable 2-stage Π-algebra in stem `k` is realizable, i.e.
/// whether `γ` is split injective.
pub fn all_realizable_in_stem(k: u32, tables: &StableTables) -> Result<StemVerdict> {
    let stem = tables.stem(k)?;
    let verdict = |answer, reason: String, blocking| Ok(StemVerdict { stem: k, answer, reason, blocking });
    if stem.group.is_trivial() {
        return verdict(StemAnswer::Yes, format!("Q_{k}^S = 0"), vec![]);
    }
    if stem.coverage == Coverage::Full {
        match tables.admissible_gamma_completions(k) {
            Ok(c) => {
                let split = c.iter().filter(|c| is_split_injective(&c.map).is_some()).count();
                let n = c.len();
                return if split == n {
                    verdict(StemAnswer::Yes, format!("γ is split injective in all {n} admissible completions"), vec![])
                } else if split == 0 {
                    verdict(StemAnswer::No, format!("γ is split injective in none of the {n} admissible completions"), vec![])
                } else {
                    let blocking = (0..stem.group.ngens())
                        .filter(|&g| c.iter().any(|x| x.map.image_of_generator(g) != c[0].map.image_of_generator(g)))
                        .map(|g| stem.entry_name(g))
                        .collect();
                    verdict(
                        StemAnswer::Undetermined,
                        format!("γ is split injective in {split} of {n} admissible completions"),
                        blocking,
                    )
                };
            }
            Err(Error::MissingTableData(_) | Error::BoundExceeded(_)) => {}
            Err(e) => return Err(e),
        }
        if stem.group.ngens() == 1 && stem.entries[0].as_ref().is_some_and(|e| e.split) {
            return verdict(StemAnswer::Yes, format!("γ is split injective on the cyclic group Q_{k}^S"), vec![]);
        }
    }
    let (kernel_group, _) = kernel(&stem.surrogate());
    if !kernel_group.is_trivial() {
        return verdict(
            StemAnswer::No,
            format!("a nonzero element of Q_{k}^S is killed by every admissible γ"),
            vec![],
        );
    }
    let blocking = (0..stem.group.ngens())
        .filter(|&g| !stem.entries[g].as_ref().is_some_and(|e| e.split))
        .map(|g| stem.entry_name(g))
        .collect();
    verdict(StemAnswer::Undetermined, format!("split injectivity of γ in stem {k} is not decided by the tables"), blocking)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::Int;
    use crate::tables::{GammaEntry, GammaKnowledge};

    fn grp(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders)
    }

    fn problem(n: u32, k: u32, a: FgAbGroup, b: FgAbGroup, eta: &[&[i64]], t: &StableTables) -> TwoStagePiAlgebra {
        TwoStagePiAlgebra::new(n, k, a, b, IntMatrix::from_i64(eta), t).unwrap()
    }

    #[test]
    fn smallest_non_realizable() {
        let t = StableTables::defaults();
        let pa = problem(5, 3, grp(&[0]), grp(&[4]), &[&[1, 0]], &t);
        let v = check(&pa, &t).unwrap();
        assert_eq!(v.status, Status::NonRealizable);
        let o = v.obstruction.unwrap();
        assert_eq!(o.text, "2ν");
        assert_eq!(o.element, vec![Int::from(2), Int::ZERO]);
        assert_eq!(v.completions.len(), 4);
    }

    #[test]
    fn alpha_detected() {
        let t = StableTables::defaults();
        let pa = problem(5, 3, grp(&[0]), grp(&[3]), &[&[0, 1]], &t);
        let v = check(&pa, &t).unwrap();
        assert_eq!(v.status, Status::Realizable);
        for c in &v.completions {
            let lifted = tensor_hom(&GroupHom::identity(&pa.a_n), &c.gamma);
            let lifted = lifted.with_groups(pa.eta.source().clone(), lifted.target().clone());
            assert_eq!(c.witness.as_ref().unwrap().compose(&lifted), pa.eta);
        }
    }

    #[test]
    fn partial_knowledge_blocks_on_nu() {
        let t = StableTables::defaults();
        let pa = problem(5, 3, grp(&[0]), grp(&[2]), &[&[1, 0]], &t);
        let v = check(&pa, &t).unwrap();
        assert_eq!(v.status, Status::Undetermined);
        assert_eq!(v.blocking, ["stem3.ν"]);

        let mut known = t.clone();
        known.gamma.insert((3, "ν".into()), GammaEntry::new(GammaKnowledge::Known(vec![Int::ONE, Int::ZERO])));
        assert_eq!(check(&pa, &known).unwrap().status, Status::Realizable);
        let mut zero = t.clone();
        zero.gamma.insert((3, "ν".into()), GammaEntry::new(GammaKnowledge::Zero));
        assert_eq!(check(&pa, &zero).unwrap().status, Status::NonRealizable);
    }

    #[test]
    fn alpha_family_fragments() {
        let t = StableTables::defaults();
        let pa = problem(9, 7, grp(&[0]), grp(&[3]), &[&[1, 0]], &t);
        let v = check(&pa, &t).unwrap();
        assert_eq!(v.status, Status::NonRealizable);

        let pa = problem(13, 11, grp(&[0]), grp(&[9]), &[&[1, 0]], &t);
        let v = check(&pa, &t).unwrap();
        assert_eq!(v.status, Status::NonRealizable);
        let o = v.obstruction.unwrap();
        assert_eq!(o.element, vec![Int::from(3), Int::ZERO]);
        assert_eq!(o.image, vec![Int::from(3)]);

        let pa = problem(13, 11, grp(&[0]), grp(&[7]), &[&[0, 1]], &t);
        assert_eq!(check(&pa, &t).unwrap().status, Status::Undetermined);
    }

    #[test]
    fn regimes_dispatch() {
        let t = StableTables::defaults();
        let pa = problem(2, 1, grp(&[2]), grp(&[4]), &[&[1]], &t);
        assert_eq!(check(&pa, &t).unwrap().status, Status::Realizable);
        let pa = problem(3, 2, FgAbGroup::free(2), grp(&[0]), &[&[1]], &t);
        assert_eq!(check(&pa, &t).unwrap().status, Status::Realizable);
        let pa = problem(3, 2, grp(&[0]), grp(&[0]), &[], &t);
        assert_eq!(check(&pa, &t).unwrap().status, Status::Realizable);
        let mut t = t;
        t.metastable_qm.insert(4, crate::quadratic::QuadraticModule::z_gamma());
        let pa = problem(4, 3, grp(&[0]), grp(&[0]), &[&[1]], &t);
        assert_eq!(pa.gamma_tilde.regime, Regime::Metastable);
        assert!(matches!(check(&pa, &t), Err(Error::UnstableCriterion { n: 4, k: 3 })));
        assert!(matches!(check_stable(&pa, &t), Err(Error::NotStableRange { n: 4, k: 3 })));
    }

    #[test]
    fn zero_eta_is_realizable() {
        let t = StableTables::defaults();
        for (n, k) in [(5, 3), (9, 7), (13, 11), (2, 5), (3, 1)] {
            let a = grp(&[0, 2]);
            let gt = gamma_tilde(n, k, &a, &t).unwrap();
            let eta = GroupHom::zero(&gt.group, &grp(&[4]));
            let pa = TwoStagePiAlgebra::from_hom(n, k, a, eta, &t).unwrap();
            assert_eq!(check(&pa, &t).unwrap().status, Status::Realizable, "n = {n}, k = {k}");
        }
    }

    #[test]
    fn malformed_eta_is_rejected() {
        let t = StableTables::defaults();
        let r = TwoStagePiAlgebra::new(5, 3, grp(&[0]), grp(&[4]), IntMatrix::from_i64(&[&[1]]), &t);
        assert!(matches!(r, Err(Error::InvalidProblem(_))));
        let r = TwoStagePiAlgebra::new(5, 3, grp(&[0]), grp(&[0]), IntMatrix::from_i64(&[&[1, 0]]), &t);
        assert!(matches!(r, Err(Error::InvalidProblem(_))));
    }

    #[test]
    fn stems() {
        let t = StableTables::defaults();
        assert_eq!(all_realizable_in_stem(1, &t).unwrap().answer, StemAnswer::Yes);
        assert_eq!(all_realizable_in_stem(2, &t).unwrap().answer, StemAnswer::Yes);
        assert_eq!(all_realizable_in_stem(3, &t).unwrap().answer, StemAnswer::No);
        assert_eq!(all_realizable_in_stem(7, &t).unwrap().answer, StemAnswer::No);
        assert_eq!(all_realizable_in_stem(5, &t).unwrap().answer, StemAnswer::Yes);
        assert!(all_realizable_in_stem(8, &t).is_err());
    }
}
