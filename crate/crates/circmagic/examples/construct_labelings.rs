//! Build distance magic labelings with the constructive labelers — one
//! per family — and check each against the verifier.
//!
//! ```bash
//! cargo run --example construct_labelings
//! ```

use circmagic::families::Family;
use circmagic::labelings::{label_family, verify_set};
use circmagic::oracle::SearchBudget;

fn main() {
    let budget = SearchBudget::default();
    let families = [
        Family::mobius_ladder_lex(6).unwrap(),
        Family::prism_lex(5).unwrap(),
        Family::cycle_lex(35).unwrap(),
        Family::cycle_lex(8).unwrap(), // falls back to search
        Family::t1_case1(5, 77).unwrap(),
        Family::t1_case2(5, 7, 11).unwrap(),
        Family::t2_family(5, 7).unwrap(),
    ];
    for f in families {
        let s = f.connection_set();
        let n = s.order();
        let l = label_family(&f, &budget).expect("labeler");
        let kappa = verify_set(&s, &l).unwrap().expect("magic");
        assert_eq!(kappa, 3 * (n + 1));
        let head: Vec<i64> = l.values().iter().take(12).copied().collect();
        println!(
            "{:<14} {:<18} kappa = {kappa:<6} labels[0..12] = {head:?}",
            f.to_string(),
            s.to_string()
        );
    }
}
