//! Sweep every connected class of every order up to a bound, comparing
//! the decision procedure against independent exhaustive search, and emit
//! one JSON line per class — the same records `circmagic scan` produces.
//!
//! ```bash
//! cargo run --example scan_orders
//! ```

use circmagic::oracle::{exhaustive_scan, SearchBudget};

fn main() {
    let budget = SearchBudget::nodes(5_000_000);
    let records = exhaustive_scan(14, &budget, 0).unwrap();
    let mut agreements = 0;
    for r in &records {
        println!("{}", serde_json::to_string(r).unwrap());
        if r.agree == Some(true) {
            agreements += 1;
        }
        assert_ne!(r.agree, Some(false), "disagreement at {}", r.set);
    }
    eprintln!(
        "{} classes, {agreements} conclusive agreements, 0 disagreements",
        records.len()
    );
}
