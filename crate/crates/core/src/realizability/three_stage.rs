//! Π-algebras in three consecutive stable degrees `n, n+1, n+2` with
//! `η₁ : Aₙ ⊗ ℤ/2 → A_{n+1}` and `η₂ : A_{n+1} ⊗ ℤ/2 → A_{n+2}`.

use serde::{Deserialize, Serialize};

use super::{Obstruction, Verdict};
use crate::error::{Error, Result};
use crate::fgab::{tensor, two_torsion_subgroup, FgAbGroup, GroupHom};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::pi_functors::eta_coefficients;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThreeStageInput {
    pub n: u32,
    pub a_n: FgAbGroup,
    pub a_n1: FgAbGroup,
    pub a_n2: FgAbGroup,
    /// Columns indexed by the generators `a⊗η` of `Aₙ ⊗ ℤ/2`.
    pub eta1: IntMatrix,
    pub eta2: IntMatrix,
}

/// Mod 2 reduction `A → A ⊗ ℤ/2⟨η⟩`, `a ↦ a⊗η`.
fn reduction(a: &FgAbGroup) -> (FgAbGroup, GroupHom) {
    let t = tensor(a, &eta_coefficients());
    let cols: Vec<_> = (0..a.ngens()).map(|i| t.pure(&a.generator(i), &[Int::ONE])).collect();
    let m = IntMatrix::from_columns(&cols, t.group.ngens());
    let q = GroupHom::new(a.clone(), t.group.clone(), m).expect("reduction mod 2 is well defined");
    (t.group, q)
}

fn map_from(name: &str, source: &FgAbGroup, target: &FgAbGroup, m: &IntMatrix) -> Result<GroupHom> {
    let m = if m.rows() == 0 || m.cols() == 0 { IntMatrix::zeros(target.ngens(), source.ngens()) } else { m.clone() };
    if m.rows() != target.ngens() || m.cols() != source.ngens() {
        return Err(Error::InvalidProblem(format!(
            "{name} must be {}×{}, got {}×{}",
            target.ngens(),
            source.ngens(),
            m.rows(),
            m.cols()
        )));
    }
    GroupHom::new(source.clone(), target.clone(), m).map_err(|e| Error::InvalidProblem(format!("{name}: {e}")))
}

/// The obstruction `O = η₂ ∘ q ∘ η₁ ∘ q ∘ i` on `Tor(Aₙ, ℤ/2)`, where `i`
/// includes the 2-torsion of `Aₙ` and `q` reduces mod 2. The Π-algebra is
/// realizable exactly when `O = 0`.
pub fn three_stage_obstruction(input: &ThreeStageInput) -> Result<(GroupHom, Verdict)> {
    if input.n < 4 {
        return Err(Error::InvalidProblem(format!("the 3-stage criterion needs n ≥ 4, got {}", input.n)));
    }
    let (an_mod2, q0) = reduction(&input.a_n);
    let (an1_mod2, q1) = reduction(&input.a_n1);
    let eta1 = map_from("η₁", &an_mod2, &input.a_n1, &input.eta1)?;
    let eta2 = map_from("η₂", &an1_mod2, &input.a_n2, &input.eta2)?;
    let (torsion, incl) = two_torsion_subgroup(&input.a_n);
    let o = eta2.compose(&q1).compose(&eta1).compose(&q0).compose(&incl);
    let o = o.with_groups(torsion.clone(), input.a_n2.clone());
    let verdict = match (0..torsion.ngens()).find(|&i| !o.target().is_zero_element(&o.image_of_generator(i))) {
        None => Verdict::realizable(None, "the obstruction η₂ ∘ Eₙ(η₁) vanishes"),
        Some(i) => {
            let x = incl.image_of_generator(i);
            let text = input.a_n.format_element(&x);
            let image = o.image_of_generator(i);
            let reason = format!(
                "η₂ ∘ Eₙ(η₁) sends {text} ∈ Tor(Aₙ, ℤ/2) to {} ≠ 0",
                input.a_n2.format_element(&image)
            );
            Verdict::non_realizable(Some(Obstruction { element: x, text, image }), reason)
        }
    };
    Ok((o, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizability::Status;

    fn input(a: &[u64], b: &[u64], c: &[u64], e1: &[&[i64]], e2: &[&[i64]]) -> ThreeStageInput {
        ThreeStageInput {
            n: 4,
            a_n: FgAbGroup::from_cyclic_orders(a),
            a_n1: FgAbGroup::from_cyclic_orders(b),
            a_n2: FgAbGroup::from_cyclic_orders(c),
            eta1: IntMatrix::from_i64(e1),
            eta2: IntMatrix::from_i64(e2),
        }
    }

    #[test]
    fn identities_on_z2() {
        let (o, v) = three_stage_obstruction(&input(&[2], &[2], &[2], &[&[1]], &[&[1]])).unwrap();
        assert_eq!(v.status, Status::NonRealizable);
        assert!(o.is_isomorphism());
    }

    #[test]
    fn vanishing_cases() {
        let (_, v) = three_stage_obstruction(&input(&[2], &[2], &[2], &[&[1]], &[&[0]])).unwrap();
        assert_eq!(v.status, Status::Realizable);
        let (o, v) = three_stage_obstruction(&input(&[0], &[2], &[2], &[&[1]], &[&[1]])).unwrap();
        assert_eq!(v.status, Status::Realizable);
        assert!(o.source().is_trivial());
        // 2-torsion of ℤ/4 is 2ℤ/4, which reduces to zero mod 2.
        let (_, v) = three_stage_obstruction(&input(&[4], &[2], &[2], &[&[1]], &[&[1]])).unwrap();
        assert_eq!(v.status, Status::Realizable);
    }

    #[test]
    fn rejects_low_degrees_and_bad_maps() {
        let mut i = input(&[2], &[2], &[2], &[&[1]], &[&[1]]);
        i.n = 3;
        assert!(three_stage_obstruction(&i).is_err());
        let i = input(&[2], &[2], &[2], &[&[1, 1]], &[&[1]]);
        assert!(three_stage_obstruction(&i).is_err());
    }
}
