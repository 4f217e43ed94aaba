//! List every classified family instance of an order, with its defining
//! connection set.
//!
//! Order 1540 = 4·5·7·11 is the worked showcase: two blowup families plus
//! seven congruence-defined ones, and each is distance magic.
//!
//! ```bash
//! cargo run --example family_catalog
//! ```

use circmagic::families::{enumerate_families, recognize};

fn main() {
    for n in [12i64, 60, 105, 1540] {
        let fams = enumerate_families(n);
        println!("order {n}: {} family instances", fams.len());
        for f in &fams {
            let s = f.connection_set();
            println!("  {:<14} {}", f.to_string(), s);
            // the recognizer inverts the constructor
            let (g, q) = recognize(&s).expect("family sets recognize themselves");
            assert_eq!(s.multiply(q).unwrap(), g.connection_set());
        }
        println!();
    }
}
