//! Quadratic tensor products: Whitehead's Γ, the exterior square, and the
//! module coming from π₅S³, checked against the brute-force presentation.

use pialg::quadratic::{brute_force_quad_tensor, cross_effect, quad_tensor, QuadraticModule, DEFAULT_ORACLE_BOUND};
use pialg::tables::parse_group;

fn main() {
    let modules = [QuadraticModule::z_gamma(), QuadraticModule::z_lambda(), QuadraticModule::pi5_s3()];
    for m in &modules {
        println!("module {}: {m}", m.builtin_name().unwrap());
    }
    for text in ["Z", "Z + Z", "Z/2", "Z/3", "Z/4", "Z/2 + Z/2", "Z/2 + Z/4"] {
        let a = parse_group(text).unwrap();
        for m in &modules {
            let q = quad_tensor(&a, m);
            let check = match brute_force_quad_tensor(&a, m, DEFAULT_ORACLE_BOUND) {
                Ok(b) if b.is_isomorphic(&q.group) => "agrees",
                Ok(_) => "DISAGREES",
                Err(_) => "oracle skipped",
            };
            println!("{text:>10} ⊗ {:<8} = {:<28} {check}", m.builtin_name().unwrap(), q.group.to_string());
        }
    }
    let z2 = parse_group("Z/2").unwrap();
    println!("cross effect Γ(ℤ/2 | ℤ/2) = {}", cross_effect(&z2, &z2, &modules[0]));
}
