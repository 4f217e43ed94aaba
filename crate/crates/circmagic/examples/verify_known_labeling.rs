//! Verify a fixed order-24 labeling against three different circulants.
//!
//! The three nontrivial order-24 candidates share the zero eigenspace of
//! their adjacency matrices, so one magic labeling works for all of them;
//! the verifier confirms the common constant 75 = 3·(24+1).
//!
//! ```bash
//! cargo run --example verify_known_labeling
//! ```

use circmagic::circulant::ConnectionSet;
use circmagic::labelings::{verify_set, Labeling};
use circmagic::selftest::GAMMA3_LABELS;

fn main() {
    let labeling = Labeling::new(GAMMA3_LABELS.to_vec()).unwrap();
    println!("labels: {:?}", labeling.values());
    for (a, b, c) in [(1, 2, 3), (1, 3, 10), (1, 5, 6)] {
        let s = ConnectionSet::new(24, [a, b, c]).unwrap();
        match verify_set(&s, &labeling).unwrap() {
            Some(kappa) => println!("{s}: magic with kappa = {kappa}"),
            None => println!("{s}: not magic"),
        }
    }
    // a transposition breaks it
    let mut tampered = GAMMA3_LABELS.to_vec();
    tampered.swap(3, 17);
    let s = ConnectionSet::new(24, [1, 2, 3]).unwrap();
    let verdict = verify_set(&s, &Labeling::new(tampered).unwrap()).unwrap();
    println!("tampered copy on {s}: {verdict:?}");
}
