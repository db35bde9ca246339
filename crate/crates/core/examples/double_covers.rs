//! Double-cover presentations, branch curves and the section `S* ∩ w*`.

use segre::{catalog, covers_of};

fn main() -> Result<(), segre::Error> {
    for e in catalog() {
        let covers = covers_of(&e.symbol)?;
        if covers.is_empty() {
            println!("{}: not a double cover of a quadric", e.symbol);
            continue;
        }
        for c in covers {
            println!(
                "{:<12} {:?} branch {} ({}), vertex {}: {}",
                e.symbol.to_string(),
                c.base,
                c.branch_symbol,
                c.branch_structure.configuration,
                c.vertex_on_branch,
                c.section
            );
        }
    }
    Ok(())
}
