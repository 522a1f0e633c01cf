//! Products in B_ω^𝓕², one for each branch of the multiplication rule.
//!
//!     cargo run --example element_arithmetic

use bicyclic_ext::{Element, Family};

fn main() -> bicyclic_ext::Result<()> {
    let f2 = Family::f2();
    let pairs = [
        ("(2,1,[0))", "(3,4,[1))"), // j1 < i2
        ("(2,2,[0))", "(2,2,[1))"), // j1 = i2
        ("(1,3,[1))", "(2,5,[0))"), // j1 > i2
        ("(0,0,[0))", "(7,3,[1))"), // unit
    ];
    for (a, b) in pairs {
        let x = f2.parse_element(a)?;
        let y = f2.parse_element(b)?;
        let xy = f2.multiply(x, y)?;
        println!("{x} · {y} = {xy}    json: {}", serde_json::to_string(&xy).unwrap());
    }

    match f2.parse_element("(1,2,[3))") {
        Ok(x) => println!("unexpected: {x}"),
        Err(e) => println!("(1,2,[3)) rejected: {e}"),
    }

    let x: Element = "(5,2,[1))".parse()?;
    println!("{x}⁻¹ = {}", x.inverse());
    Ok(())
}
