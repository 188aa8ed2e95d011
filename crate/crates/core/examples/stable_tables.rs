//! Inspecting the built-in stable tables and refining them with an overlay.

use pialg::tables::{Overlay, StableTables};

fn main() {
    let defaults = StableTables::defaults();
    for k in [1, 3, 7] {
        println!("{}", defaults.describe_stem(k));
    }
    for c in defaults.admissible_gamma_completions(3).unwrap() {
        println!("stem 3 completion: {}", c.describe());
    }

    let overlay = Overlay::parse("[gamma]\n3.ν = known [1, 0]\n").unwrap();
    let refined = defaults.apply(&overlay, "inline").unwrap();
    println!("after overlay ({}):", refined.sources.join(" + "));
    for c in refined.admissible_gamma_completions(3).unwrap() {
        println!("stem 3 completion: {}", c.describe());
    }
    for (name, holds) in defaults.check_ring_relations() {
        println!("relation {name}: {}", holds.map_or("not checkable".into(), |h| h.to_string()));
    }
}
