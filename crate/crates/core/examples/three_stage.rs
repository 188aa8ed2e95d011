//! The composite obstruction for a Π-algebra in three consecutive degrees.

use pialg::matrix::IntMatrix;
use pialg::realizability::{three_stage_obstruction, ThreeStageInput};
use pialg::FgAbGroup;

fn main() {
    for (a, e1, e2) in [(2, 1, 1), (2, 1, 0), (4, 1, 1), (0, 1, 1)] {
        let a_n = FgAbGroup::from_cyclic_orders(&[a]);
        let z2 = FgAbGroup::cyclic(2);
        let input = ThreeStageInput {
            n: 4,
            a_n: a_n.clone(),
            a_n1: z2.clone(),
            a_n2: z2,
            eta1: IntMatrix::from_i64(&[&[e1]]),
            eta2: IntMatrix::from_i64(&[&[e2]]),
        };
        let (o, v) = three_stage_obstruction(&input).unwrap();
        println!("Aₙ = {a_n}, η₁ = {e1}, η₂ = {e2}: O = {o}; {}", v.status);
    }
}
