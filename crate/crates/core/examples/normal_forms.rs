//! Endomorphism expressions, application, composition and predicates.
//!
//!     cargo run --example normal_forms

use bicyclic_ext::{compose, parse_endo_expression, Triple};

fn main() -> bicyclic_ext::Result<()> {
    let x = Triple::new(1, 2, 1);
    for text in ["id", "alpha[2,1]", "beta[3,2];w^4", "gamma[2]", "delta[2]", "chi[2,1]", "w^5"] {
        let e = parse_endo_expression(text)?;
        let p = e.predicates();
        println!(
            "{:<16} {x} ↦ {:<12} injective={} annihilating={} monoidal={}",
            e.to_string(),
            e.apply(x)?.to_string(),
            p.injective,
            p.annihilating,
            p.monoidal
        );
    }

    // maps act on the right: "f;g" applies f first
    for (f, g) in [
        ("w^2", "w^3"),
        ("gamma[2]", "gamma[3]"),
        ("w", "alpha[3,0]"),
        ("w", "delta[2]"),
        ("alpha[2,1]", "gamma[1]"),
        ("chi[2,0]", "w"),
        ("chi[2,0]", "gamma[2]"),
    ] {
        let h = compose(&parse_endo_expression(f)?, &parse_endo_expression(g)?)?;
        println!("{f} then {g} = {h}");
    }
    Ok(())
}
