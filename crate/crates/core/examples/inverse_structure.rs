//! Idempotents, the natural partial order and Green's relations.
//!
//!     cargo run --example inverse_structure

use bicyclic_ext::window::window;
use bicyclic_ext::{GreenRelation, Triple};

fn main() {
    let idempotents: Vec<String> = window(2)
        .into_iter()
        .filter(|x| x.is_idempotent())
        .map(|x| x.to_string())
        .collect();
    println!("idempotents with i,j <= 2: {}", idempotents.join(" "));

    let unit = Triple::UNIT;
    for x in [Triple::new(1, 1, 0), Triple::new(0, 0, 1), Triple::new(3, 1, 1)] {
        println!("{x} ≼ {unit}: {}", x.natural_leq(unit));
    }

    // everything below (3,1,[0)) in the natural order, inside a small window
    let top = Triple::new(3, 1, 0);
    let below: Vec<String> = window(6)
        .into_iter()
        .filter(|x| x.natural_leq(top))
        .map(|x| x.to_string())
        .collect();
    println!("below {top}: {}", below.join(" "));

    let x = Triple::new(2, 3, 0);
    for y in [Triple::new(2, 5, 0), Triple::new(4, 3, 0), Triple::new(2, 3, 1)] {
        let rels: Vec<&str> = [("R", GreenRelation::R), ("L", GreenRelation::L), ("H", GreenRelation::H)]
            .into_iter()
            .filter(|&(_, r)| x.green_related(y, r))
            .map(|(name, _)| name)
            .collect();
        println!("{x} vs {y}: related by {:?}", rels);
    }
}
