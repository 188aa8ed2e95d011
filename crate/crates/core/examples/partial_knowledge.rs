//! A verdict blocked by an unknown table entry, and how refining the entry
//! settles it either way.

use pialg::matrix::IntMatrix;
use pialg::realizability::{check, TwoStagePiAlgebra};
use pialg::tables::{Overlay, StableTables};
use pialg::FgAbGroup;

fn main() {
    let base = StableTables::defaults();
    let pa = TwoStagePiAlgebra::new(5, 3, FgAbGroup::free(1), FgAbGroup::cyclic(2), IntMatrix::from_i64(&[&[1, 0]]), &base)
        .unwrap();
    let v = check(&pa, &base).unwrap();
    println!("defaults: {} (blocking {})", v.status, v.blocking.join(", "));
    for line in ["3.ν = known [1, 0]", "3.ν = zero"] {
        let refined = base.apply(&Overlay::parse(&format!("[gamma]\n{line}\n")).unwrap(), line).unwrap();
        println!("with {line}: {}", check(&pa, &refined).unwrap().status);
    }
}
