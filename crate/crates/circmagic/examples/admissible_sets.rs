//! Compute the admissible character set `A_n(S) = {j : χ_j(S) = 0}` of a
//! few circulants, with the type classification of each character.
//!
//! ```bash
//! cargo run --example admissible_sets
//! ```

use circmagic::circulant::ConnectionSet;
use circmagic::spectra::{admissible_set, char_sum_is_zero};

fn main() {
    let sets = [
        ConnectionSet::new(24, [1, 2, 3]).unwrap(),
        ConnectionSet::new(60, [5, 6, 12]).unwrap(),
        ConnectionSet::new(60, [1, 5, 9]).unwrap(),
        ConnectionSet::new(7, [1, 2, 3]).unwrap(),
    ];
    for s in sets {
        println!("A_{}({}):", s.order(), s);
        let adm = admissible_set(&s);
        if adm.is_empty() {
            println!("  empty - 0 is not an eigenvalue, not distance magic");
        }
        for ch in &adm {
            // the congruence engine and the cyclotomic oracle must agree
            assert!(char_sum_is_zero(&s, ch.j));
            let w = &ch.witnesses[0];
            println!(
                "  j = {:>3}  types {:?}  witness (s1,s2,s3) = {:?}, k = {:?}",
                ch.j, ch.types, w.assignment, w.ks
            );
        }
        println!();
    }
}
