//! Enumerate every connected valency-6 circulant of a given order up to
//! multiplier equivalence and run the kernel prefilter: a class can only
//! be distance magic if its admissible set is nonempty and has no common
//! divisor with the order.
//!
//! Orders 12, 24 and 60 reproduce the published candidate counts 2, 5
//! and 15.
//!
//! ```bash
//! cargo run --example candidate_survey
//! ```

use circmagic::circulant::enumerate_sets;
use circmagic::spectra::{admissible_set, candidate_filter, FilterOutcome, TypeTag};

fn main() {
    for n in [12i64, 24, 60] {
        let classes = enumerate_sets(n);
        let mut survivors = 0;
        println!("order {n}: {} classes up to multiplier equivalence", classes.len());
        for s in &classes {
            let outcome = candidate_filter(s).unwrap();
            if !outcome.passed() {
                continue;
            }
            survivors += 1;
            let adm = admissible_set(s);
            let mut profile = String::new();
            for (tag, name) in [(TypeTag::T1, "1"), (TypeTag::T2, "2"), (TypeTag::T3, "3")] {
                if adm.iter().any(|c| c.has(tag)) {
                    profile.push_str(name);
                }
            }
            let js: Vec<i64> = adm.iter().map(|c| c.j).collect();
            println!("  candidate {s}  types {{{profile}}}  A = {js:?}");
        }
        let filtered = classes
            .iter()
            .filter(|s| matches!(candidate_filter(s).unwrap(), FilterOutcome::CommonDivisor(_)))
            .count();
        println!(
            "  -> {survivors} candidates ({} empty-kernel, {filtered} common-divisor)\n",
            classes.len() - survivors - filtered
        );
    }
}
