//! The degeneration graph with class changes along each edge.

use segre::classify::{lookup, transition_edges};

fn main() {
    for (from, to) in transition_edges() {
        let c = |s| lookup(s).map(|e| e.class).unwrap_or_default();
        println!("{:<12} -> {:<12} class {} -> {}", from.to_string(), to.to_string(), c(&from), c(&to));
    }
}
