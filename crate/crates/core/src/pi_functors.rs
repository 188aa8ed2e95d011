//! The functor `Γ̃ₙᵏ` whose comma category is 2-stage Π-algebras in
//! degrees `n` and `n + k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{tensor, tensor_hom, FgAbGroup, GroupHom, Tensor};
use crate::quadratic::{quad_tensor, QuadTensor, QuadraticModule};
use crate::tables::{Coverage, StableTables, StemData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    /// `k = 1`: `Γ(A)` for `n = 2`, `A ⊗ ℤ/2` above.
    K1,
    /// `k = 2`: `Λ²(A)` for `n = 3`, zero otherwise.
    K2,
    /// `k ≤ n − 2`: `A ⊗ Q_k^S`.
    Stable,
    /// `k ≥ n`: `A ⊗ Q_{k,n}` from tabulated values.
    UnstableTabulated,
    /// `k = n − 1`: `A ⊗ᑫ Q_{n−1}{Sⁿ}`.
    Metastable,
}

impl Regime {
    /// Total on `n ≥ 2`, `k ≥ 1`.
    pub fn of(n: u32, k: u32) -> Regime {
        match k {
            1 => Regime::K1,
            2 => Regime::K2,
            _ if k + 1 == n => Regime::Metastable,
            _ if k + 2 <= n => Regime::Stable,
            _ => Regime::UnstableTabulated,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::K1 => "K1",
            Regime::K2 => "K2",
            Regime::Stable => "STABLE",
            Regime::UnstableTabulated => "UNSTABLE_TABULATED",
            Regime::Metastable => "METASTABLE",
        })
    }
}

#[derive(Clone, Debug)]
enum Construction {
    /// `A ⊗ C` for a fixed coefficient group.
    Tensor(Tensor),
    /// `A ⊗ᑫ M`.
    Quadratic(Box<QuadTensor>),
    Zero,
}

/// `Γ̃ₙᵏ(A)` with generator names such as `1⊗ν`, `γ(1)`, `e₁∧e₂`.
#[derive(Clone, Debug)]
pub struct GammaTildeResult {
    pub n: u32,
    pub k: u32,
    pub group: FgAbGroup,
    pub regime: Regime,
    /// `Fragment` when only the α family part of `Q_k^S` is known: `group`
    /// is then the corresponding direct summand of `Γ̃ₙᵏ(A)`.
    pub coverage: Coverage,
    construction: Construction,
    /// The stem data used in the stable regime.
    stem: Option<StemData>,
}

impl GammaTildeResult {
    /// Names of the generators, in the order `η` matrices use.
    pub fn labels(&self) -> Vec<String> {
        self.group.label_list()
    }

    /// `A ⊗ C` bookkeeping in the tensor regimes.
    pub fn tensor(&self) -> Option<&Tensor> {
        match &self.construction {
            Construction::Tensor(t) => Some(t),
            _ => None,
        }
    }

    pub fn quadratic(&self) -> Option<&QuadTensor> {
        match &self.construction {
            Construction::Quadratic(q) => Some(q.as_ref()),
            _ => None,
        }
    }

    pub fn stem_data(&self) -> Option<&StemData> {
        self.stem.as_ref()
    }
}

fn tensor_result(n: u32, k: u32, a: &FgAbGroup, c: &FgAbGroup, regime: Regime) -> GammaTildeResult {
    let t = tensor(a, c);
    GammaTildeResult {
        n,
        k,
        group: t.group.clone(),
        regime,
        coverage: Coverage::Full,
        construction: Construction::Tensor(t),
        stem: None,
    }
}

fn quadratic_result(n: u32, k: u32, a: &FgAbGroup, m: &QuadraticModule, regime: Regime) -> GammaTildeResult {
    let q = quad_tensor(a, m);
    GammaTildeResult {
        n,
        k,
        group: q.group.clone(),
        regime,
        coverage: Coverage::Full,
        construction: Construction::Quadratic(Box::new(q)),
        stem: None,
    }
}

/// `ℤ/2⟨η⟩`, the coefficients of `Γ̃ₙ¹` for `n ≥ 3`.
pub fn eta_coefficients() -> FgAbGroup {
    FgAbGroup::cyclic(2).with_labels(vec!["η"]).expect("one generator")
}

pub fn gamma_tilde(n: u32, k: u32, a: &FgAbGroup, tables: &StableTables) -> Result<GammaTildeResult> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidProblem(format!("Γ̃ₙᵏ needs n ≥ 2 and k ≥ 1, got n = {n}, k = {k}")));
    }
    let regime = Regime::of(n, k);
    let zero = || GammaTildeResult {
        n,
        k,
        group: FgAbGroup::trivial(),
        regime,
        coverage: Coverage::Full,
        construction: Construction::Zero,
        stem: None,
    };
    Ok(match regime {
        Regime::K1 if n == 2 => quadratic_result(n, k, a, &QuadraticModule::z_gamma(), regime),
        Regime::K1 => tensor_result(n, k, a, &eta_coefficients(), regime),
        Regime::K2 if n == 3 => quadratic_result(n, k, a, &QuadraticModule::z_lambda(), regime),
        Regime::K2 => zero(),
        Regime::Metastable => {
            let m = tables.metastable_qm.get(&n).ok_or_else(|| {
                Error::MissingTableData(format!("Q_{}{{S^{n}}} is not tabulated", n - 1))
            })?;
            quadratic_result(n, k, a, m, regime)
        }
        Regime::Stable => {
            let stem = tables.stem(k)?;
            let mut r = tensor_result(n, k, a, &stem.group, regime);
            r.coverage = stem.coverage;
            r.stem = Some(stem);
            r
        }
        Regime::UnstableTabulated => {
            let q = tables
                .q_unstable(k, n)
                .ok_or_else(|| Error::MissingTableData(format!("Q_{{{k},{n}}} is not tabulated")))?;
            if q.is_trivial() {
                zero()
            } else {
                tensor_result(n, k, a, &q, regime)
            }
        }
    })
}

/// `Γ̃ₙᵏ(f)` between the groups [`gamma_tilde`] returns for the source and
/// target of `f`.
pub fn gamma_tilde_induced(n: u32, k: u32, f: &GroupHom, tables: &StableTables) -> Result<GroupHom> {
    let src = gamma_tilde(n, k, f.source(), tables)?;
    let dst = gamma_tilde(n, k, f.target(), tables)?;
    Ok(induced_between(&src, &dst, f))
}

/// `Γ̃(f)` for precomputed source and target results.
pub fn induced_between(src: &GammaTildeResult, dst: &GammaTildeResult, f: &GroupHom) -> GroupHom {
    match (&src.construction, &dst.construction) {
        (Construction::Tensor(s), Construction::Tensor(_)) => {
            let id = GroupHom::identity(s.right());
            tensor_hom(f, &id).with_groups(src.group.clone(), dst.group.clone())
        }
        (Construction::Quadratic(s), Construction::Quadratic(d)) => s.induced(f, d),
        _ => GroupHom::zero(&src.group, &dst.group),
    }
}
