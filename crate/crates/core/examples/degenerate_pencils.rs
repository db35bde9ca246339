//! Pencils whose members are all singular, and cones.

use segre::cli::{analyze, pencil_from_forms};
use segre::verify::degenerate_pairs;

fn main() -> Result<(), segre::Error> {
    for (label, text) in degenerate_pairs() {
        let r = analyze(&pencil_from_forms(&text)?)?;
        let d = r.degeneracy.expect("degenerate");
        println!("{label:<9} {}", d.verdict);
    }
    let cone = "4*X0*X2 + 2*X1^2 + 2*X1*X2 + 4*X3*X4 + X4^2; 2*X0*X2 + X1^2 + 2*X3*X4";
    let r = analyze(&pencil_from_forms(cone)?)?;
    let s = r.surface.expect("has a smooth member");
    println!("{:<9} {:?}", s.symbol.to_string(), s.reason);
    Ok(())
}
