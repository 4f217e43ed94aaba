//! A self-contained fixture suite over the published computed artifacts:
//! admissible sets with their type tags, the order-1540 family survey, the
//! order-24 labeling table, candidate counts at orders 12, 24 and 60, and
//! the constructive labelings at checkable scale. `circmagic selftest`
//! runs it from the command line.

use crate::circulant::{enumerate_sets, ConnectionSet};
use crate::families::{
    decide, enumerate_families, recognize, type3_necessary, DmVerdict, Family, Type3Outcome,
    YesEvidence,
};
use crate::labelings::{label_lex_pair, label_t1_case2, label_t2, verify_set, Labeling};
use crate::modular::{crt_solve, p_part, Congruence};
use crate::oracle::SearchBudget;
use crate::spectra::{admissible_set, candidate_filter, type1_test, type2_test, type3_test, TypeTag};
use serde::Serialize;

/// The published distance magic labeling of `Circ(24; {±1, ±2, ±3})`,
/// indexed by vertex. Its magic constant is 75, and the same value
/// sequence is magic for `Circ(24; {±1, ±3, ±10})` and
/// `Circ(24; {±1, ±5, ±6})`, whose adjacency matrices share the zero
/// eigenspace.
pub const GAMMA3_LABELS: [i64; 24] = [
    2, 7, 15, 5, 22, 18, 11, 19, 3, 8, 13, 6, 23, 16, 12, 20, 1, 9, 14, 4, 24, 17, 10, 21,
];

/// One fixture outcome.
#[derive(Debug, Clone, Serialize)]
pub struct Fixture {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Suite {
    fixtures: Vec<Fixture>,
}

impl Suite {
    fn check(&mut self, name: &str, passed: bool, detail: String) {
        self.fixtures.push(Fixture {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    fn eq<T: std::fmt::Debug + PartialEq>(&mut self, name: &str, got: T, expected: T) {
        let passed = got == expected;
        let detail = if passed {
            format!("{got:?}")
        } else {
            format!("expected {expected:?}, got {got:?}")
        };
        self.check(name, passed, detail);
    }
}

fn set(n: i64, a: i64, b: i64, c: i64) -> ConnectionSet {
    ConnectionSet::new(n, [a, b, c]).unwrap()
}

fn tags(s: &ConnectionSet) -> Vec<(i64, Vec<TypeTag>)> {
    admissible_set(s)
        .into_iter()
        .map(|c| (c.j, c.types))
        .collect()
}

/// Run every fixture; all must pass for the binary's `selftest` to exit 0.
pub fn run_selftest() -> Vec<Fixture> {
    let mut suite = Suite { fixtures: Vec::new() };
    let s = &mut suite;

    // residue arithmetic
    s.eq("p-part-of-60-at-5", p_part(60, 5).unwrap(), 5);
    s.eq("p-part-of-60-at-3", p_part(60, 3).unwrap(), 3);
    let crt = |sys: &[(i64, i64)]| {
        crt_solve(
            &sys.iter()
                .map(|&(r, m)| Congruence::new(r, m).unwrap())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    };
    s.eq("crt-order-1540-d5", crt(&[(0, 4), (2, 5), (-2, 77)]), 152);
    s.eq("crt-order-1540-d7", crt(&[(0, 4), (2, 7), (-2, 55)]), 548);

    // admissible sets and type tags
    use TypeTag::*;
    s.eq(
        "admissible-24-1-2-3",
        tags(&set(24, 1, 2, 3)),
        vec![
            (3, vec![T1]),
            (8, vec![T2]),
            (9, vec![T1]),
            (15, vec![T1]),
            (16, vec![T2]),
            (21, vec![T1]),
        ],
    );
    s.eq(
        "admissible-60-5-6-12",
        tags(&set(60, 5, 6, 12)),
        vec![
            (2, vec![T3]),
            (14, vec![T3]),
            (15, vec![T1]),
            (22, vec![T3]),
            (26, vec![T3]),
            (34, vec![T3]),
            (38, vec![T3]),
            (45, vec![T1]),
            (46, vec![T3]),
            (58, vec![T3]),
        ],
    );
    s.check(
        "type-tests-on-published-characters",
        type1_test(&set(24, 1, 2, 3), 3).is_some()
            && type2_test(&set(24, 1, 2, 3), 8).is_some()
            && type1_test(&set(60, 5, 6, 12), 15).is_some()
            && type3_test(&set(60, 5, 6, 12), 2).is_some()
            && type1_test(&set(60, 1, 5, 9), 5).is_some()
            && type2_test(&set(60, 1, 5, 9), 5).is_some(),
        "type-1/2/3 witnesses at the published indices".to_string(),
    );

    // candidate counts up to multiplier equivalence
    let candidates = |n: i64| -> usize {
        enumerate_sets(n)
            .iter()
            .filter(|t| candidate_filter(t).unwrap().passed())
            .count()
    };
    s.eq("candidates-order-12", candidates(12), 2);
    s.eq("candidates-order-24", candidates(24), 5);
    s.eq("candidates-order-60", candidates(60), 15);

    // the order-1540 survey: nine family instances, nine listed sets
    let fams = enumerate_families(1540);
    s.eq("families-order-1540-count", fams.len(), 9);
    let mut got: Vec<[i64; 3]> = fams
        .iter()
        .map(|f| f.connection_set().canonical_form().reps())
        .collect();
    got.sort_unstable();
    let mut expected: Vec<[i64; 3]> = [
        [1, 385, 769],
        [2, 385, 768],
        [2, 152, 385],
        [2, 385, 548],
        [2, 68, 385],
        [1, 155, 231],
        [1, 329, 715],
        [1, 209, 595],
        [5, 413, 737],
    ]
    .iter()
    .map(|&[a, b, c]| set(1540, a, b, c).canonical_form().reps())
    .collect();
    expected.sort_unstable();
    s.eq("families-order-1540-sets", got, expected);

    // recognizers on the order-24 candidates
    s.eq(
        "recognize-24-1-6-11",
        recognize(&set(24, 1, 6, 11)).map(|(f, _)| f.to_string()),
        Some("Ml[6]".to_string()),
    );
    s.eq(
        "recognize-24-1-7-9",
        recognize(&set(24, 1, 7, 9)).map(|(f, _)| f.to_string()),
        Some("C3K[8]".to_string()),
    );
    s.eq(
        "recognize-24-1-2-3-is-nontrivial",
        recognize(&set(24, 1, 2, 3)).map(|(f, _)| f.to_string()),
        None,
    );

    // the published order-24 labeling table
    let gamma3 = Labeling::new(GAMMA3_LABELS.to_vec()).unwrap();
    s.eq(
        "gamma3-table-verifies",
        verify_set(&set(24, 1, 2, 3), &gamma3).unwrap(),
        Some(75),
    );
    s.eq(
        "gamma4-same-values-verify",
        verify_set(&set(24, 1, 3, 10), &gamma3).unwrap(),
        Some(75),
    );
    s.eq(
        "gamma5-same-values-verify",
        verify_set(&set(24, 1, 5, 6), &gamma3).unwrap(),
        Some(75),
    );
    // negative control: a transposition must break the table and be caught
    let mut tampered = GAMMA3_LABELS.to_vec();
    tampered.swap(0, 1);
    s.eq(
        "gamma3-tampering-is-detected",
        verify_set(&set(24, 1, 2, 3), &Labeling::new(tampered).unwrap()).unwrap(),
        None,
    );

    // type-3 necessary conditions at order 60
    s.eq(
        "type3-filter-60-5-6-12",
        type3_necessary(&set(60, 5, 6, 12)).unwrap(),
        Type3Outcome::Pass,
    );

    // constructive labelings at checkable scale
    let ml3 = Family::mobius_ladder_lex(3).unwrap();
    s.eq(
        "pairing-labeling-ml3",
        verify_set(&ml3.connection_set(), &label_lex_pair(&ml3).unwrap()).unwrap(),
        Some(39),
    );
    let pr3 = Family::prism_lex(3).unwrap();
    s.eq(
        "pairing-labeling-pr3",
        verify_set(&pr3.connection_set(), &label_lex_pair(&pr3).unwrap()).unwrap(),
        Some(39),
    );
    let t1b = Family::t1_case2(5, 7, 11).unwrap();
    s.eq(
        "t1-case2-labeling-order-1540",
        verify_set(&t1b.connection_set(), &label_t1_case2(&t1b).unwrap()).unwrap(),
        Some(4623),
    );
    let t2 = Family::t2_family(5, 7).unwrap();
    s.eq(
        "t2-labeling-order-105",
        verify_set(&t2.connection_set(), &label_t2(&t2).unwrap()).unwrap(),
        Some(318),
    );

    // decision procedure on published instances
    let budget = SearchBudget::nodes(20_000_000);
    let verdict = decide(&set(1540, 2, 152, 385), &budget).unwrap();
    s.eq(
        "decide-1540-2-152-385",
        match verdict {
            DmVerdict::Yes(YesEvidence::Family { family, .. }) => family.to_string(),
            other => format!("{other:?}"),
        },
        "T1a[5,77]".to_string(),
    );
    let verdict = decide(&set(105, 1, 6, 34), &budget).unwrap();
    s.eq(
        "decide-105-1-6-34",
        match verdict {
            DmVerdict::Yes(YesEvidence::Family { family, .. }) => family.to_string(),
            other => format!("{other:?}"),
        },
        "T2[5,7]".to_string(),
    );
    let verdict = decide(&set(24, 1, 2, 3), &budget).unwrap();
    s.check(
        "decide-24-1-2-3-by-search",
        matches!(verdict, DmVerdict::Yes(YesEvidence::Labeling(_))),
        format!("verdict: {}", if verdict.is_yes() { "yes" } else { "not yes" }),
    );
    let verdict = decide(&set(7, 1, 2, 3), &budget).unwrap();
    s.check(
        "decide-7-1-2-3-empty-kernel",
        matches!(
            verdict,
            DmVerdict::No(crate::families::NoReason::EmptyKernel)
        ),
        format!("{verdict:?}"),
    );

    suite.fixtures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_passes() {
        for f in run_selftest() {
            assert!(f.passed, "fixture {} failed: {}", f.name, f.detail);
        }
    }
}
