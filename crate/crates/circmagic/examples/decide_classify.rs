//! Run the full decision procedure on a spread of inputs: kernel
//! prefilter, tag profile, the all-type-1 / all-type-2 classifications,
//! the type-3 necessary conditions, and bounded search for the mixed
//! profiles the classification leaves open.
//!
//! ```bash
//! cargo run --example decide_classify
//! ```

use circmagic::circulant::ConnectionSet;
use circmagic::families::{decide, DmVerdict, NoReason, YesEvidence};
use circmagic::oracle::SearchBudget;

fn main() {
    let budget = SearchBudget::nodes(20_000_000);
    let inputs = [
        (7i64, 1i64, 2i64, 3i64), // empty kernel
        (16, 1, 2, 3),            // common divisor
        (1540, 2, 152, 385),      // all type 1: congruence family
        (24, 1, 6, 11),           // all type 1: ladder blowup
        (105, 1, 6, 34),          // all type 2: congruence family
        (15, 1, 4, 6),            // all type 2: cycle blowup
        (18, 1, 5, 7),            // all type 2 but even order
        (24, 1, 2, 3),            // mixed types 1+2: search finds
        (60, 5, 6, 12),           // types 1+3: open after the filter
    ];
    for (n, a, b, c) in inputs {
        let s = ConnectionSet::new(n, [a, b, c]).unwrap();
        let verdict = decide(&s, &budget).unwrap();
        let text = match &verdict {
            DmVerdict::Yes(YesEvidence::Family { family, multiplier }) => {
                format!("yes - {family} (multiplier {multiplier})")
            }
            DmVerdict::Yes(YesEvidence::Labeling(_)) => "yes - labeling found by search".into(),
            DmVerdict::No(NoReason::CommonDivisor(d)) => {
                format!("no - common divisor {d} across the admissible set")
            }
            DmVerdict::No(reason) => format!("no - {reason:?}"),
            DmVerdict::Unknown(r) => format!("unknown - budget after {} nodes", r.nodes),
        };
        println!("{s:<16} {text}");
    }
}
