//! The graph model: normalized connection sets, adjacency, the multiplier
//! action of `Z_n^*`, canonical forms and enumeration of all valency-6
//! circulants of a given order up to multiplier equivalence.
//!
//! A connection set is always stored through its sorted representative
//! triple `(a, b, c)` with `1 <= a < b < c < n/2`, so a set prints the way
//! it is usually written even when it was entered with residues above
//! `n/2`. Two sets describe isomorphic graphs whenever one is a unit
//! multiple of the other; [`ConnectionSet::canonical_form`] picks the
//! lexicographically least orbit member as the class representative.

use crate::modular::gcd;
use crate::{Error, Result};
use std::fmt;

/// A circulant of arbitrary even valency: order `n` plus normalized
/// representatives. Valency-6 work goes through [`ConnectionSet`]; this
/// type exists for the tetravalent subgraphs used by the constructive
/// labelers and for the universal verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circulant {
    n: i64,
    reps: Vec<i64>,
}

impl Circulant {
    pub fn new(n: i64, elems: &[i64]) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("order must be >= 3, got {n}")));
        }
        let mut reps: Vec<i64> = elems.iter().map(|&s| normalize_rep(n, s)).collect();
        reps.sort_unstable();
        for &r in &reps {
            if r == 0 || 2 * r == n {
                return Err(Error::DegenerateSet(format!(
                    "element {r} is 0 or n/2 modulo {n}"
                )));
            }
        }
        if reps.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateSet(format!(
                "collision after normalization in {reps:?} (mod {n})"
            )));
        }
        Ok(Circulant { n, reps })
    }

    pub fn order(&self) -> i64 {
        self.n
    }

    pub fn valency(&self) -> usize {
        2 * self.reps.len()
    }

    pub fn reps(&self) -> &[i64] {
        &self.reps
    }

    /// Neighbors of `v`: `v + r, v - r` for each representative, in that
    /// fixed order.
    pub fn neighbors(&self, v: i64) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.valency());
        for &r in &self.reps {
            out.push((v + r).rem_euclid(self.n));
            out.push((v - r).rem_euclid(self.n));
        }
        out
    }
}

/// Fold `s` modulo `n` into the representative range `[0, n/2]`.
fn normalize_rep(n: i64, s: i64) -> i64 {
    let m = s.rem_euclid(n);
    m.min(n - m)
}

/// A valency-6 connection set `S = {±a, ±b, ±c}` on `Z_n`, stored as the
/// sorted triple `(a, b, c)` with `1 <= a < b < c < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectionSet {
    n: i64,
    reps: [i64; 3],
    connected: bool,
}

impl ConnectionSet {
    /// Build a connection set from three residues, normalizing each to its
    /// representative below `n/2`. Rejects residues that collapse the
    /// valency below 6 (zero, `n/2`, or collisions after normalization).
    pub fn new(n: i64, elems: [i64; 3]) -> Result<Self> {
        if n < 7 {
            return Err(Error::Precondition(format!("order must be >= 7, got {n}")));
        }
        let mut reps = [0i64; 3];
        for (slot, &s) in reps.iter_mut().zip(elems.iter()) {
            let r = normalize_rep(n, s);
            if r == 0 || 2 * r == n {
                return Err(Error::DegenerateSet(format!(
                    "element {s} is 0 or n/2 modulo {n}"
                )));
            }
            *slot = r;
        }
        reps.sort_unstable();
        if reps[0] == reps[1] || reps[1] == reps[2] {
            return Err(Error::DegenerateSet(format!(
                "elements {elems:?} collide modulo {n}"
            )));
        }
        let connected = gcd(gcd(reps[0], reps[1]), gcd(reps[2], n)) == 1;
        Ok(ConnectionSet { n, reps, connected })
    }

    pub fn order(&self) -> i64 {
        self.n
    }

    /// The sorted representative triple `(a, b, c)`.
    pub fn reps(&self) -> [i64; 3] {
        self.reps
    }

    /// `<S> = Z_n`, i.e. `gcd(a, b, c, n) = 1`. Derived at construction;
    /// [`ConnectionSet::recheck_connected`] recomputes it from scratch.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn recheck_connected(&self) -> bool {
        gcd(gcd(self.reps[0], self.reps[1]), gcd(self.reps[2], self.n)) == 1
    }

    /// The six neighbors of `v`: `v±a, v±b, v±c` in that fixed order.
    pub fn neighbors(&self, v: i64) -> [i64; 6] {
        let n = self.n;
        let [a, b, c] = self.reps;
        [
            (v + a).rem_euclid(n),
            (v - a).rem_euclid(n),
            (v + b).rem_euclid(n),
            (v - b).rem_euclid(n),
            (v + c).rem_euclid(n),
            (v - c).rem_euclid(n),
        ]
    }

    /// The set `qS` for a unit `q`. This is a group action of `Z_n^*`.
    pub fn multiply(&self, q: i64) -> Result<ConnectionSet> {
        if gcd(q.rem_euclid(self.n), self.n) != 1 {
            return Err(Error::NotAUnit { q, n: self.n });
        }
        // a unit cannot create zeros or collisions, so this cannot fail
        ConnectionSet::new(
            self.n,
            [q * self.reps[0], q * self.reps[1], q * self.reps[2]],
        )
    }

    /// The lexicographically least triple over the multiplier orbit
    /// `{qS : q in Z_n^*}`. Two sets are multiplier-equivalent exactly when
    /// their canonical forms coincide.
    pub fn canonical_form(&self) -> ConnectionSet {
        let mut best = *self;
        for q in units(self.n) {
            let cand = self.multiply(q).expect("unit");
            if cand.reps < best.reps {
                best = cand;
            }
        }
        best
    }

    pub fn to_circulant(&self) -> Circulant {
        Circulant {
            n: self.n,
            reps: self.reps.to_vec(),
        }
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{},{},{}",
            self.n, self.reps[0], self.reps[1], self.reps[2]
        )
    }
}

/// Parse the textual form `"n:a,b,c"`; residues may be unnormalized.
pub fn parse_connection_set(text: &str) -> Result<ConnectionSet> {
    let (n_part, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected \"n:a,b,c\", got {text:?}")))?;
    let n: i64 = n_part
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad order {n_part:?}")))?;
    let elems: Vec<i64> = rest
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad residue {p:?}")))
        })
        .collect::<Result<_>>()?;
    if elems.len() != 3 {
        return Err(Error::Parse(format!(
            "expected exactly 3 residues, got {}",
            elems.len()
        )));
    }
    ConnectionSet::new(n, [elems[0], elems[1], elems[2]])
}

/// The units of `Z_n` in ascending order.
pub fn units(n: i64) -> Vec<i64> {
    (1..n).filter(|&q| gcd(q, n) == 1).collect()
}

/// One canonical representative per multiplier-equivalence class of
/// connected valency-6 connection sets on `Z_n`, in lexicographic order.
pub fn enumerate_sets(n: i64) -> Vec<ConnectionSet> {
    let mut seen = std::collections::BTreeSet::new();
    let half = (n - 1) / 2;
    for a in 1..=half {
        for b in (a + 1)..=half {
            for c in (b + 1)..=half {
                if gcd(gcd(a, b), gcd(c, n)) != 1 {
                    continue;
                }
                let s = ConnectionSet::new(n, [a, b, c]).expect("valid triple");
                seen.insert(s.canonical_form());
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: i64, a: i64, b: i64, c: i64) -> ConnectionSet {
        ConnectionSet::new(n, [a, b, c]).unwrap()
    }

    #[test]
    fn normalization_folds_above_half() {
        assert_eq!(set(24, 23, 2, 3).reps(), [1, 2, 3]);
        assert_eq!(set(1540, 2, 385, 1388).reps(), [2, 152, 385]);
    }

    #[test]
    fn rejects_degenerate_elements() {
        assert!(matches!(
            ConnectionSet::new(12, [1, 6, 5]),
            Err(Error::DegenerateSet(_))
        ));
        assert!(matches!(
            ConnectionSet::new(12, [1, 11, 5]), // 11 ≡ -1
            Err(Error::DegenerateSet(_))
        ));
        assert!(matches!(
            ConnectionSet::new(10, [1, 2, 5]),
            Err(Error::DegenerateSet(_))
        ));
        assert!(ConnectionSet::new(6, [1, 2, 4]).is_err());
    }

    #[test]
    fn neighbor_order_is_fixed() {
        assert_eq!(set(24, 1, 2, 3).neighbors(0), [1, 23, 2, 22, 3, 21]);
        assert_eq!(set(8, 1, 2, 3).neighbors(4), [5, 3, 6, 2, 7, 1]);
        assert_eq!(set(12, 1, 3, 5).neighbors(11), [0, 10, 2, 8, 4, 6]);
    }

    #[test]
    fn multiply_examples() {
        let s = set(1540, 2, 385, 768);
        assert_eq!(s.multiply(1).unwrap(), s);
        // 7*5=35 -> 25, 7*6=42 -> 18, 7*12=84 -> 24
        assert_eq!(set(60, 5, 6, 12).multiply(7).unwrap().reps(), [18, 24, 25]);
        // q = -1 fixes every normalized set
        assert_eq!(set(24, 1, 2, 3).multiply(23).unwrap().reps(), [1, 2, 3]);
        assert!(set(24, 1, 2, 3).multiply(6).is_err());
    }

    #[test]
    fn connectivity_flag() {
        assert!(set(24, 1, 2, 3).is_connected());
        assert!(!set(24, 2, 4, 6).is_connected());
        assert!(set(24, 2, 3, 4).is_connected());
        assert!(set(24, 1, 2, 3).recheck_connected());
    }

    #[test]
    fn canonical_form_constant_on_orbit() {
        let s = set(60, 5, 6, 12);
        let canon = s.canonical_form();
        for q in units(60) {
            assert_eq!(s.multiply(q).unwrap().canonical_form(), canon);
        }
        // exhaust all 8 units of Z_24 by hand for (1,7,9)
        let t = set(24, 1, 7, 9);
        let min = units(24)
            .into_iter()
            .map(|q| t.multiply(q).unwrap().reps())
            .min()
            .unwrap();
        assert_eq!(t.canonical_form().reps(), min);
        assert_eq!(t.canonical_form().reps(), [1, 7, 9]);
    }

    #[test]
    fn enumerate_order_7() {
        let all = enumerate_sets(7);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].reps(), [1, 2, 3]);
    }

    #[test]
    fn enumerate_is_duplicate_free_and_sorted() {
        for n in [12, 24, 30, 60] {
            let all = enumerate_sets(n);
            for w in all.windows(2) {
                assert!(w[0] < w[1]);
            }
            for s in &all {
                assert_eq!(s.canonical_form(), *s);
                assert!(s.is_connected());
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let s = parse_connection_set("1540:2,385,1388").unwrap();
        assert_eq!(s.reps(), [2, 152, 385]);
        assert_eq!(s.to_string(), "1540:2,152,385");
        assert!(parse_connection_set("junk").is_err());
        assert!(parse_connection_set("24:1,2").is_err());
        assert!(parse_connection_set("24:1,2,x").is_err());
    }

    #[test]
    fn generic_circulant_tetravalent() {
        let g = Circulant::new(30, &[1, 4]).unwrap();
        assert_eq!(g.valency(), 4);
        assert_eq!(g.neighbors(0), vec![1, 29, 4, 26]);
        let g6 = set(24, 1, 2, 3).to_circulant();
        assert_eq!(g6.valency(), 6);
        assert_eq!(g6.neighbors(0), vec![1, 23, 2, 22, 3, 21]);
    }

    proptest! {
        #[test]
        fn multiply_is_a_group_action(
            n in 8i64..200,
            qa in 1i64..200, qb in 1i64..200,
            a in 1i64..100, b in 1i64..100, c in 1i64..100
        ) {
            prop_assume!(gcd(qa, n) == 1 && gcd(qb, n) == 1);
            let s = ConnectionSet::new(n, [a, b, c]);
            prop_assume!(s.is_ok());
            let s = s.unwrap();
            let lhs = s.multiply(qa).unwrap().multiply(qb).unwrap();
            let rhs = s.multiply((qa as i128 * qb as i128).rem_euclid(n as i128) as i64).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn neighbors_distinct_and_symmetric(
            n in 8i64..200,
            a in 1i64..100, b in 1i64..100, c in 1i64..100,
            v in 0i64..200
        ) {
            let s = ConnectionSet::new(n, [a, b, c]);
            prop_assume!(s.is_ok());
            let s = s.unwrap();
            let v = v % n;
            let nb = s.neighbors(v);
            let mut sorted = nb;
            sorted.sort_unstable();
            prop_assert!(sorted.windows(2).all(|w| w[0] != w[1]));
            for u in nb {
                prop_assert!(s.neighbors(u).contains(&v));
            }
        }

        #[test]
        fn canonical_form_idempotent(
            n in 8i64..120,
            a in 1i64..60, b in 1i64..60, c in 1i64..60
        ) {
            let s = ConnectionSet::new(n, [a, b, c]);
            prop_assume!(s.is_ok());
            let canon = s.unwrap().canonical_form();
            prop_assert_eq!(canon.canonical_form(), canon);
        }
    }
}
