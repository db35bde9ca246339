//! Segre symbols straight from matrices, including roots that are not
//! rational.

use segre::arith::{int, QMatrix};
use segre::pencil::invariant_factors;
use segre::symbol::{compute_symbol, elementary_structure};
use segre::QuadricPencil;

fn show(name: &str, u: QMatrix, v: QMatrix) -> Result<(), segre::Error> {
    let p = QuadricPencil::new(u, v)?;
    let s = compute_symbol(&p)?;
    println!("{name}: {s}");
    for g in s.groups() {
        println!("    {:?} at {}", g.exponents, g.root);
    }
    for (basis, exps) in elementary_structure(&invariant_factors(&p)?)? {
        println!("    basis {basis}: exponents {exps:?}");
    }
    Ok(())
}

fn main() -> Result<(), segre::Error> {
    let diag = |d: &[i64]| QMatrix::diagonal(&d.iter().map(|&x| int(x)).collect::<Vec<_>>());
    show("distinct diagonal", diag(&[1, 2, 3, 4, 5]), QMatrix::identity(5))?;
    show("two double roots", diag(&[1, 1, 2, 2, 3]), QMatrix::identity(5))?;
    // each of ±√2 twice, and 0
    let u = QMatrix::from_ints(&[
        &[1, 1, 0, 0, 0],
        &[1, -1, 0, 0, 0],
        &[0, 0, 1, 1, 0],
        &[0, 0, 1, -1, 0],
        &[0, 0, 0, 0, 0],
    ]);
    let v = QMatrix::identity(5);
    show("irrational roots", u, v)?;
    Ok(())
}
