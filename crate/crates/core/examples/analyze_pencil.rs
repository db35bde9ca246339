//! Full report for a pencil given as two quadratic forms.
//!
//!     cargo run --example analyze_pencil -- "X0^2 + 2*X1^2 + 3*X2^2 + 4*X3^2 + 5*X4^2; X0^2 + X1^2 + X2^2 + X3^2 + X4^2"

use segre::cli::{analyze, pencil_from_forms};

fn main() -> Result<(), segre::Error> {
    let text = std::env::args().nth(1).unwrap_or_else(|| {
        "4*X0*X1 + X1^2 + 3*X2^2 + 4*X3^2 + 5*X4^2; 2*X0*X1 + X2^2 + X3^2 + X4^2".to_string()
    });
    let pencil = pencil_from_forms(&text)?;
    let report = analyze(&pencil)?;
    print!("{}", report.to_table());
    Ok(())
}
