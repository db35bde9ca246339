//! The quadratic-form grammar and its error cases.

use segre::cli::{parse_quadratic_form, render_form};

fn main() {
    for text in [
        "2*X0*X1 + X2^2 + X3^2 + X4^2",
        "3/2*X3^2 - X0*X4",
        "2X0X1 - X1 X0",
        "X0^3",
        "X5^2",
        "X0*X1 - X1*X0",
    ] {
        match parse_quadratic_form(text) {
            Ok(f) => println!("{text:<30} -> {}\n{}", render_form(&f.matrix), f.matrix),
            Err(e) => println!("{text:<30} -> error: {e}"),
        }
    }
}
