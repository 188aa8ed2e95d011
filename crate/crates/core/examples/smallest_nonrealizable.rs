//! The smallest non-realizable example: Aₙ = ℤ, Aₙ₊₃ = ℤ/4, η(1⊗ν) = 1.

use pialg::matrix::IntMatrix;
use pialg::realizability::{check, TwoStagePiAlgebra};
use pialg::tables::StableTables;
use pialg::FgAbGroup;

fn main() {
    let tables = StableTables::defaults();
    let pa = TwoStagePiAlgebra::new(
        5,
        3,
        FgAbGroup::free(1),
        FgAbGroup::cyclic(4),
        IntMatrix::from_i64(&[&[1, 0]]),
        &tables,
    )
    .unwrap();
    let v = check(&pa, &tables).unwrap();
    println!("{v}");
    if let Some(o) = &v.obstruction {
        println!("η({}) ≠ 0 but every completion of γ kills it", o.text);
    }
}
