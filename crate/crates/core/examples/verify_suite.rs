//! Runs every law check at its default bound and prints one line per law.
//!
//!     cargo run --release --example verify_suite

use bicyclic_ext::verify::{all_hold, Verifier};

fn main() {
    let reports = Verifier::default().default_suite();
    for r in &reports {
        println!("{r}");
    }
    if !all_hold(&reports) {
        std::process::exit(1);
    }
}
