//! The sixteen Segre quartic surfaces and the class formula.

use segre::{catalog, class_degree};

fn main() -> Result<(), segre::Error> {
    println!("{:<14}{:<18}{:>6}{:>7}{:>8}  Aut_e", "symbol", "singularities", "class", "lines", "planes");
    for e in catalog() {
        let sing: Vec<String> = e.singularities.iter().map(ToString::to_string).collect();
        let class = class_degree(e.singularities)?;
        assert_eq!(class, e.class);
        println!(
            "{:<14}{:<18}{:>6}{:>7}{:>8}  {}",
            e.symbol.to_string(),
            if sing.is_empty() { "-".to_string() } else { sing.join("+") },
            class,
            e.lines,
            e.planes_in_dual,
            e.aut_e
        );
        for note in e.notes() {
            println!("    note: {note}");
        }
    }
    Ok(())
}
