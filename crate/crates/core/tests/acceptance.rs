//! One line per acceptance criterion, then a nonzero exit if any failed.

use std::time::Instant;

use segre::verify;

fn main() {
    let start = Instant::now();
    let mut failed = Vec::new();
    for id in 1..=verify::CRITERIA {
        let t = Instant::now();
        let r = verify::run(id);
        println!("{}  [{:.2}s]", r.line(), t.elapsed().as_secs_f64());
        for f in r.failures.iter().skip(1).take(5) {
            println!("         also: {f}");
        }
        if !r.passed {
            failed.push(id);
        }
    }
    println!("acceptance suite finished in {:.1}s", start.elapsed().as_secs_f64());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
