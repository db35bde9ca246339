//! Floating-point recovery of Jordan structure, compared with the exact
//! symbol.

use segre::numeric::{numeric_exponent_partitions, DEFAULT_TOL_CLUSTER, DEFAULT_TOL_RANK};
use segre::{compute_symbol, random_instance, SegreSymbol};

fn main() -> Result<(), segre::Error> {
    for (text, seed) in [("[113]", 1), ("[(21)(11)]", 2), ("[5]", 3), ("[(41)]", 4)] {
        let s: SegreSymbol = text.parse()?;
        let p = random_instance(&s, seed)?;
        let exact = compute_symbol(&p)?;
        let numeric = numeric_exponent_partitions(&p, DEFAULT_TOL_CLUSTER, DEFAULT_TOL_RANK)?;
        println!("{text}: exact {exact}");
        for c in &numeric.clusters {
            println!("    {:>10.6} {:+.1e}i  {:?}", c.eigenvalue.re, c.eigenvalue.im, c.partition);
        }
    }
    Ok(())
}
