//! The tetravalent sublabeling behind the type-1 case-1 construction.
//!
//! The order-`4dd'` labeler splits its graph into two copies of a
//! tetravalent circulant `Circ(2n0; {±1, ±c0})` and needs a labeling of
//! that subgraph with three properties: magic constant `2(2n0+1)`, low
//! labels exactly on even vertices, and antipodal labels summing to
//! `2n0+1`. The constrained search produces one; this example prints the
//! labeling and checks each property.
//!
//! ```bash
//! cargo run --example sublabeling_contract
//! ```

use circmagic::circulant::Circulant;
use circmagic::labelings::{tetravalent_sublabeling, verify};
use circmagic::oracle::SearchBudget;

fn main() {
    let budget = SearchBudget::default();
    for (n0, c0) in [(15i64, 4i64), (21, 8), (35, 6)] {
        let l = tetravalent_sublabeling(n0, c0, &budget).expect("contract labeling");
        let g = Circulant::new(2 * n0, &[1, c0]).unwrap();
        let kappa = verify(&g, &l).unwrap().expect("magic");
        assert_eq!(kappa, 2 * (2 * n0 + 1));
        let evens_low = (0..n0).all(|i| l.value(2 * i) <= n0);
        let antipodal = (0..2 * n0).all(|y| l.value(y) + l.value(y + n0) == 2 * n0 + 1);
        println!(
            "Circ({}; {{±1, ±{c0}}}): kappa = {kappa}, low-on-even = {evens_low}, antipodal = {antipodal}",
            2 * n0
        );
        println!("   {:?}", l.values());
    }
}
