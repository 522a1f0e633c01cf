//! ω-closed families, general-family products, the zero quotient and the
//! inductive-set test.
//!
//!     cargo run --example families

use std::collections::BTreeSet;

use bicyclic_ext::family::closure_witness;
use bicyclic_ext::verify::check_inductive_characterization;
use bicyclic_ext::{BoundedSubset, Element, Family};

fn main() -> bicyclic_ext::Result<()> {
    for tails in [vec![0, 1], vec![0, 2], vec![1, 2, 3], vec![1, 3]] {
        let set: BTreeSet<u64> = tails.iter().copied().collect();
        match closure_witness(&set)? {
            None => println!("{tails:?}: ω-closed"),
            Some(w) => println!("{tails:?}: not ω-closed, {w}"),
        }
    }

    let fam = Family::new([0, 1, 2], false)?.with_empty();
    let x = fam.parse_element("(0,3,[2))")?;
    let y = fam.parse_element("(1,0,[0))")?;
    println!("over {{[0),[1),[2)}}: {x} · {y} = {}", fam.multiply(x, y)?);
    println!("{x} · 0 = {}", fam.multiply(x, Element::Zero)?);

    for f in [
        BoundedSubset::tail_from(3),
        BoundedSubset::new([0], Some(2)),
        BoundedSubset::new([4, 5], Some(6)),
        BoundedSubset::empty(),
    ] {
        let (identity, inductive) = check_inductive_characterization(&f);
        println!("F = {f}: (-1+F)∩F=F is {identity}, inductive is {inductive}");
    }
    Ok(())
}
