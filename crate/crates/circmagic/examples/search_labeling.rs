//! Exhaustive backtracking search for distance magic labelings, with the
//! kernel prefilter and symmetry reductions.
//!
//! ```bash
//! cargo run --example search_labeling
//! ```

use circmagic::circulant::ConnectionSet;
use circmagic::labelings::verify_set;
use circmagic::oracle::{search_labeling, SearchBudget, SearchOutcome};
use std::time::Instant;

fn main() {
    let budget = SearchBudget::nodes(20_000_000);
    for (n, a, b, c) in [
        (12i64, 1i64, 3i64, 5i64), // blowup of a Möbius ladder
        (24, 1, 2, 3),             // nontrivial, mixed types 1 and 2
        (24, 1, 7, 9),             // blowup of an 8-cycle
        (15, 1, 2, 4),             // no labeling exists
        (7, 1, 2, 3),              // ruled out by the prefilter
    ] {
        let s = ConnectionSet::new(n, [a, b, c]).unwrap();
        let t0 = Instant::now();
        let outcome = search_labeling(&s, &budget).unwrap();
        let elapsed = t0.elapsed();
        match outcome {
            SearchOutcome::Found(l) => {
                let kappa = verify_set(&s, &l).unwrap().unwrap();
                println!("{s}: found in {elapsed:?}, kappa = {kappa}");
                println!("   {:?}", l.values());
            }
            SearchOutcome::Exhausted => {
                println!("{s}: no labeling exists ({elapsed:?})");
            }
            SearchOutcome::BudgetExceeded { nodes, depth_reached } => {
                println!("{s}: gave up after {nodes} nodes (depth {depth_reached})");
            }
        }
    }
}
