//! Deciding whether one homomorphism factors through another, and whether a
//! map is split injective.

use pialg::fgab::{factor_through, is_split_injective};
use pialg::matrix::IntMatrix;
use pialg::{FgAbGroup, GroupHom};

fn hom(a: &FgAbGroup, b: &FgAbGroup, rows: &[&[i64]]) -> GroupHom {
    GroupHom::new(a.clone(), b.clone(), IntMatrix::from_i64(rows)).unwrap()
}

fn main() {
    let z2 = FgAbGroup::cyclic(2);
    let z4 = FgAbGroup::cyclic(4);

    // ℤ/2 → ℤ/4 (1 ↦ 2) is injective but not split.
    let g = hom(&z2, &z4, &[&[2]]);
    println!("{g}: split injective = {}", is_split_injective(&g).is_some());

    // Does id: ℤ/2 → ℤ/2 factor as h ∘ g?
    let id = GroupHom::identity(&z2);
    match factor_through(&id, &g) {
        Some(h) => println!("id = h ∘ g with h = {h}"),
        None => println!("id does not factor through g"),
    }

    // The zero map ℤ/2 → ℤ/2 always factors.
    let zero = GroupHom::zero(&z2, &z2);
    println!("0 factors through g: {}", factor_through(&zero, &g).is_some());

    // ℤ/3 ⊕ ℤ/2 → ℤ/6 ⊕ ℤ/4 splits.
    let a = FgAbGroup::from_cyclic_orders(&[3, 2]);
    let b = FgAbGroup::from_cyclic_orders(&[6, 4]);
    let f = hom(&a, &b, &[&[2, 3], &[0, 2]]);
    match is_split_injective(&f) {
        Some(r) => {
            println!("{f} splits with retraction {r}");
            assert!(r.compose(&f).is_isomorphism());
        }
        None => println!("{f} does not split"),
    }
}
