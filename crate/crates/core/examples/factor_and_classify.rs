//! Recovering `ε₁ϖⁿ` from a map given only by its values.
//!
//!     cargo run --example factor_and_classify

use bicyclic_ext::{classify_window, factor, FnMap, Triple, WindowMap};

fn main() -> bicyclic_ext::Result<()> {
    // (i,j,[0)) ↦ (3i+1, 3j+1, [1)), (i,j,[1)) ↦ (3i+2, 3j+2, [0)):
    // the unit goes to (1,1,[1)), so n = 3
    let map = FnMap(|x: Triple| {
        Some(if x.f == 0 {
            Triple::new(3 * x.i + 1, 3 * x.j + 1, 1)
        } else {
            Triple::new(3 * x.i + 2, 3 * x.j + 2, 0)
        })
    });
    let e = factor(&map)?;
    let unit = e.unit_image();
    println!("factored: {} ; w^{}  (s={}, p={})", e.monoid_part, e.power, unit.i, unit.f);

    let sampled = WindowMap::tabulate(&map, 8)?;
    let json = sampled.to_json();
    println!("window map: {} entries, {} bytes of JSON", sampled.entries().len(), json.len());
    let back = WindowMap::from_json(&json)?;
    println!("classified: {}", classify_window(&back)?);

    let constant = WindowMap::tabulate(&FnMap(|_| Some(Triple::new(3, 3, 1))), 8)?;
    println!("constant (3,3,[1)): {}", classify_window(&constant)?);

    let broken = WindowMap::tabulate(&FnMap(Some), 4)?.with_entry(Triple::new(0, 0, 1), Triple::UNIT)?;
    match classify_window(&broken) {
        Ok(e) => println!("unexpected: {e}"),
        Err(err) => println!("broken map rejected: {err}"),
    }
    Ok(())
}
