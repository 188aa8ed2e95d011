//! Tensor products, Tor, Hom and (co)kernels of finitely generated abelian groups.

use pialg::fgab::{hom_group, tensor, tor};
use pialg::matrix::IntMatrix;
use pialg::tables::parse_group;
use pialg::GroupHom;

fn main() {
    let a = parse_group("Z + Z/4 + Z/6").unwrap();
    let b = parse_group("Z/2 + Z/9").unwrap();
    println!("A = {a}");
    println!("B = {b}");
    println!("A ⊗ B     = {}", tensor(&a, &b).group);
    println!("Tor(A, B) = {}", tor(&a, &b));
    let h = hom_group(&a, &b);
    println!("Hom(A, B) = {}", h.group);

    // ℤ/12 → ℤ/8, 1 ↦ 2
    let f = GroupHom::new(parse_group("Z/12").unwrap(), parse_group("Z/8").unwrap(), IntMatrix::from_i64(&[&[2]]))
        .unwrap();
    println!("f = {f}");
    println!("ker f   = {}", f.kernel().0);
    println!("im f    = {}", f.image().0);
    println!("coker f = {}", f.cokernel().0);

    let (canon, _) = parse_group("Z/4 + Z/6 + Z/10").unwrap().canonical();
    println!("Z/4 + Z/6 + Z/10 ≅ {canon}");
}
