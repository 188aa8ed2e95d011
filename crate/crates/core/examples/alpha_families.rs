//! Odd-primary α families and which stems have every 2-stage Π-algebra realizable.

use pialg::realizability::all_realizable_in_stem;
use pialg::tables::{alpha_generators, divided_alpha, AlphaPrimes, StableTables};

fn main() {
    for k in (3..=23).step_by(2) {
        let gens: Vec<String> =
            alpha_generators(k, &AlphaPrimes::All).iter().map(|g| format!("{} (order {})", g.label, g.order)).collect();
        if !gens.is_empty() {
            println!("stem {k:>2}: {}", gens.join(", "));
        }
    }
    for j in [1, 2] {
        let (stem, label, mult) = divided_alpha(3, 6, j).unwrap();
        println!("α_{{6/{j}}} at p = 3 is {mult}·{label} in stem {stem}");
    }

    let tables = StableTables::defaults();
    for k in 1..=12 {
        match all_realizable_in_stem(k, &tables) {
            Ok(v) => println!("stem {k:>2}: {} ({})", v.answer, v.reason),
            Err(e) => println!("stem {k:>2}: {e}"),
        }
    }
}
