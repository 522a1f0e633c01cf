//! The endomorphism ϖ, its powers, and the corner submonoids it cuts out.
//!
//!     cargo run --example pi_and_corners

use bicyclic_ext::endo::pi_power_preimage;
use bicyclic_ext::window::window;
use bicyclic_ext::{apply_pi, apply_pi_power, corner_membership, CornerDescriptor, Triple};

fn main() -> bicyclic_ext::Result<()> {
    let x = Triple::new(0, 2, 1);
    let mut y = x;
    for n in 0..=6 {
        println!("{x} w^{n} = {}", apply_pi_power(x, n)?);
        assert_eq!(y, apply_pi_power(x, n)?);
        y = apply_pi(y)?;
    }

    for (s, p) in [(0, 1), (1, 0), (1, 1)] {
        let c = CornerDescriptor { s, p };
        let members = window(3).into_iter().filter(|&x| corner_membership(c, x)).count();
        let images = window(3)
            .into_iter()
            .filter(|&x| pi_power_preimage(x, c.pi_exponent()).is_some())
            .count();
        println!(
            "B({s},{p}) has {members} members with i,j <= 3; image of w^{} has {images}",
            c.pi_exponent()
        );
    }

    let e = CornerDescriptor { s: 1, p: 1 };
    let x = Triple::new(0, 0, 1);
    println!(
        "{x} is in the image of w^1: {}, in B(1,1): {}",
        pi_power_preimage(x, 1).is_some(),
        corner_membership(e, x)
    );
    Ok(())
}
