//! The functor Γ̃ₙᵏ applied to one group across all regimes.

use pialg::pi_functors::gamma_tilde;
use pialg::tables::{parse_group, StableTables};

fn main() {
    let tables = StableTables::defaults();
    let a = parse_group("Z + Z/2").unwrap();
    println!("A = {a}");
    for (n, k) in [(2, 1), (4, 1), (3, 2), (5, 2), (4, 3), (5, 3), (9, 7), (13, 11), (6, 4)] {
        match gamma_tilde(n, k, &a, &tables) {
            Ok(g) => println!("n = {n:>2}, k = {k:>2} [{}]: {}", g.regime, g.group),
            Err(e) => println!("n = {n:>2}, k = {k:>2}: {e}"),
        }
    }
}
